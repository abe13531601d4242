#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace ntiers::cli {

/// Exit-code contract shared by every command: success, model-validation
/// failure (or a non-empty diff), and IO/parse/usage failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_io = 2;

/// Human-readable results go to `out`, diagnostics to `err`, one per line:
/// severity, path, code, message.

struct TransformArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::filesystem::path> trace;
  bool fig9_compat = false;
};
int cmd_transform(const TransformArgs& args, std::ostream& out, std::ostream& err);

struct ValidateArgs {
  std::filesystem::path input;
  std::string kind;  // "pim" or "psm"
};
int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

struct InspectArgs {
  std::filesystem::path input;
};
int cmd_inspect(const InspectArgs& args, std::ostream& out, std::ostream& err);

struct DiffArgs {
  std::filesystem::path left;
  std::filesystem::path right;
  bool order_insensitive = false;
};
int cmd_diff(const DiffArgs& args, std::ostream& out, std::ostream& err);

struct ScaffoldArgs {
  std::filesystem::path input;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> templates;
  bool print_manifest = false;
};
int cmd_scaffold(const ScaffoldArgs& args, std::ostream& out, std::ostream& err);

}  // namespace ntiers::cli
