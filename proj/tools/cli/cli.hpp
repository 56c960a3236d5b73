#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>

namespace genii::cli {

enum ExitCode : int { kOk = 0, kSchema = 1, kIo = 2 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it over `path`, so readers never
// see a half-written document.
void write_atomically(const std::filesystem::path& path, const std::string& content);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct GalleryReport {
  std::size_t rendered = 0;
  std::size_t duplicates = 0;
  std::size_t failed = 0;
  bool truncated = false;  // the limit stopped the run before the product was exhausted
};

// Renders the Cartesian product of the plan's axes into `out_dir` as
// numbered SVGs plus index.html. Failures are reported on `err` and skipped.
GalleryReport run_gallery(const std::string& plan_text, const std::string& data_text,
                          const std::filesystem::path& out_dir, double dpi, std::ostream& err);

}  // namespace genii::cli
