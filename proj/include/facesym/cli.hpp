#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "facesym/analysis.hpp"

namespace facesym::cli {

struct AnalyzeOptions {
  std::filesystem::path manifest;
  LandmarkSource landmarks;
  PipelineConfig pipeline;
  std::optional<std::filesystem::path> out_csv;
  std::optional<std::filesystem::path> out_json;
  std::optional<std::filesystem::path> out_svg;
};

// Scores a single neutral-state still to obtain an external baseline.
struct BaselineOptions {
  std::filesystem::path image;
  LandmarkSource landmarks;
  ScoringParams scoring;
};

using Command = std::variant<AnalyzeOptions, BaselineOptions>;

// Thrown for unknown flags, out-of-range values and missing inputs.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Carries the rendered --help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name.
Command parse_args(const std::vector<std::string>& args);

// Exit codes: 0 success, 1 bad input or usage, 2 internal error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace facesym::cli
