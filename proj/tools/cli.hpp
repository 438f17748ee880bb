#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace freetwist::cli {

enum class OutputFormat { Text, Json };

/// Parsed command line. Word and homomorphism arguments stay as text until
/// the subcommand validates them against the ranks.
struct CliInvocation {
  std::string subcommand;
  OutputFormat format = OutputFormat::Text;

  std::string phi;
  std::string psi;
  std::string u;
  std::string v;
  std::string w;
  std::optional<int> rank;
  std::optional<int> rank_domain;
  std::optional<int> rank_codomain;

  std::string experiment;
  int n = 2;
  int m = 2;
  unsigned l = 1;
  std::optional<long> p;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool timing = false;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUndecided = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freetwist::cli
