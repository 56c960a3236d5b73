#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genii {

enum class ErrorCode {
  EmptyPath,
  DegenerateEdge,
  DegeneratePath,
  UnknownMode,
  BadOrder,
  MissingPoints,
  IndexOutOfRange,
  JumpEdge,
  ShapeUnsupportedOnPath,
  ZeroRange,
  NonPolygonalInput,
  BadColour,
  RadiusTooLarge,
  MissingDatum,
  OddPairCount,
  SchemaError,
  Unrenderable,
};

std::string_view to_string(ErrorCode code);

// Base error for every failure raised by the engine. The code is the stable
// contract; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// One validation finding, anchored at a dotted field path ("path.mode",
// "categories[2].range", or "" for the document root).
struct SchemaIssue {
  std::string path;
  std::string message;

  bool operator==(const SchemaIssue&) const = default;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(std::vector<SchemaIssue> issues);
  SchemaError(std::string path, std::string message)
      : SchemaError(std::vector<SchemaIssue>{{std::move(path), std::move(message)}}) {}

  const std::vector<SchemaIssue>& issues() const noexcept { return issues_; }
  // Path of the first issue.
  const std::string& path() const noexcept { return issues_.front().path; }

 private:
  std::vector<SchemaIssue> issues_;
};

}  // namespace genii
