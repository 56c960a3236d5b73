#include "genii/errors.hpp"

namespace genii {
namespace {

std::string join_issues(const std::vector<SchemaIssue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.path.empty() ? std::string("<root>") : issue.path;
    out += ": ";
    out += issue.message;
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::DegeneratePath: return "DegeneratePath";
    case ErrorCode::UnknownMode: return "UnknownMode";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::MissingPoints: return "MissingPoints";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::JumpEdge: return "JumpEdge";
    case ErrorCode::ShapeUnsupportedOnPath: return "ShapeUnsupportedOnPath";
    case ErrorCode::ZeroRange: return "ZeroRange";
    case ErrorCode::NonPolygonalInput: return "NonPolygonalInput";
    case ErrorCode::BadColour: return "BadColour";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::MissingDatum: return "MissingDatum";
    case ErrorCode::OddPairCount: return "OddPairCount";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::Unrenderable: return "Unrenderable";
  }
  return "Unknown";
}

SchemaError::SchemaError(std::vector<SchemaIssue> issues)
    : Error(ErrorCode::SchemaError,
            issues.empty() ? std::string("schema error") : join_issues(issues)),
      issues_(issues.empty() ? std::vector<SchemaIssue>{{"", "schema error"}}
                             : std::move(issues)) {}

}  // namespace genii
