#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "CLI11.hpp"
#include "genii/dataset.hpp"
#include "genii/gene.hpp"
#include "genii/path_generators.hpp"
#include "genii/render.hpp"

namespace genii::cli {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

namespace {

void print_issues(const SchemaError& e, std::ostream& err) {
  for (const auto& issue : e.issues())
    err << (issue.path.empty() ? "<root>" : issue.path) << ": " << issue.message << "\n";
}

struct RenderArgs {
  std::string gene;
  std::string data;
  std::string out;
  double dpi = 96.0;
  bool debug_path = false;
  std::string seed_name;
  std::string background;
};

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const std::string gene_text = read_file(a.gene);
    const std::string data_text = read_file(a.data);
    Gene gene;
    ParsedDataset data;
    try {
      gene = parse_gene(gene_text);
    } catch (const SchemaError& e) {
      err << "invalid gene " << a.gene << "\n";
      print_issues(e, err);
      return kSchema;
    }
    try {
      data = parse_dataset(data_text);
    } catch (const SchemaError& e) {
      err << "invalid data " << a.data << "\n";
      print_issues(e, err);
      return kSchema;
    }
    for (const auto& w : data.warnings) err << "warning: " << w << "\n";

    RenderOptions opts;
    opts.dpi = a.dpi;
    opts.emit_debug_path = a.debug_path;
    if (!a.seed_name.empty()) opts.seed_name = a.seed_name;
    if (!a.background.empty()) opts.background = a.background;
    const RenderResult result = render(gene, data.dataset, opts);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";

    if (a.out.empty() || a.out == "-") out << result.svg;
    else write_atomically(a.out, result.svg);
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const SchemaError& e) {
    print_issues(e, err);
    return kSchema;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kSchema;
  }
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  const auto issues = validate_gene(text);
  if (issues.empty()) {
    out << "OK\n";
    return kOk;
  }
  for (const auto& issue : issues)
    out << (issue.path.empty() ? "<root>" : issue.path) << ": " << issue.message << "\n";
  out << issues.size() << (issues.size() == 1 ? " problem\n" : " problems\n");
  return kSchema;
}

int cmd_paths(std::ostream& out) {
  for (const auto& info : path_catalogue()) {
    out << info.name << "\t" << info.description;
    if (!info.parameters.empty()) {
      out << " [";
      for (std::size_t i = 0; i < info.parameters.size(); ++i)
        out << (i ? ", " : "") << info.parameters[i];
      out << "]";
    }
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Render gene + data pairs to SVG", "genii"};
  app.require_subcommand(1);

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "Render a gene with a dataset to SVG");
  render_cmd->add_option("-g,--gene", ra.gene, "Gene file")->required();
  render_cmd->add_option("-d,--data", ra.data, "Dataset file")->required();
  render_cmd->add_option("-o,--out", ra.out, "Output SVG (stdout when omitted)");
  render_cmd->add_option("--dpi", ra.dpi, "Dots per inch")
      ->envname("GENII_DPI")
      ->check(CLI::PositiveNumber);
  render_cmd->add_flag("--debug-path", ra.debug_path, "Draw the flowpath skeleton");
  render_cmd->add_option("--seed-name", ra.seed_name, "Seed from this name instead of the gene's");
  render_cmd->add_option("--background", ra.background, "Background colour");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a gene and list every problem");
  validate_cmd->add_option("gene", validate_path, "Gene file")->required();

  auto* paths_cmd = app.add_subcommand("paths", "List the built-in path modes");

  std::string plan_path;
  std::string gallery_data;
  std::string gallery_out;
  double gallery_dpi = 96.0;
  auto* gallery_cmd = app.add_subcommand("gallery", "Render every variant of a gallery plan");
  gallery_cmd->add_option("-p,--plan", plan_path, "Gallery plan file")->required();
  gallery_cmd->add_option("-d,--data", gallery_data, "Dataset file")->required();
  gallery_cmd->add_option("-o,--out", gallery_out, "Output directory")->required();
  gallery_cmd->add_option("--dpi", gallery_dpi, "Dots per inch")
      ->envname("GENII_DPI")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchema;
  }

  if (*render_cmd) return cmd_render(ra, out, err);
  if (*validate_cmd) return cmd_validate(validate_path, out, err);
  if (*paths_cmd) return cmd_paths(out);
  if (*gallery_cmd) {
    try {
      std::filesystem::create_directories(gallery_out);
      const auto report =
          run_gallery(read_file(plan_path), read_file(gallery_data), gallery_out, gallery_dpi, err);
      out << report.rendered << " rendered, " << report.duplicates << " duplicates skipped, "
          << report.failed << " failed";
      if (report.truncated) out << "; stopped at the limit, more variants remain";
      out << "\n";
      return report.failed == 0 ? kOk : kSchema;
    } catch (const IoError& e) {
      err << "error: " << e.what() << "\n";
      return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
      err << "error: " << e.what() << "\n";
      return kIo;
    } catch (const SchemaError& e) {
      print_issues(e, err);
      return kSchema;
    }
  }
  return kSchema;
}

}  // namespace genii::cli
