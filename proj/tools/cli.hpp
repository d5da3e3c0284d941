#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace asms::cli {

enum class Command { kGenerate, kVerify, kLangford, kInspect };

/// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  Command command = Command::kGenerate;
  std::optional<int> n;
  std::string form = "centered";  // centered | classic
  std::string format = "csv";     // csv | json
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::optional<std::string> sequence;
  std::optional<std::string> report;
  std::uint64_t budget = 100'000'000;
  bool all = false;
  std::optional<int> m;
  std::optional<int> k;
  int d = 4;
};

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_langford(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_inspect(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asms::cli
