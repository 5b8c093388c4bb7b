#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace faclab::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

/// --threads wins over FACLAB_THREADS; the default is one worker.
unsigned resolve_threads(std::optional<unsigned> flag, const char* env_value);

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Identity checks behind `verify --suite`. Throws std::invalid_argument for
/// an unknown suite name.
std::vector<SuiteCheck> run_verify_suite(const std::string& suite);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faclab::cli
