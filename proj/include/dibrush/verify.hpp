#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dibrush {

enum class Suite { Theorems, Oracle, Transpose };

std::optional<Suite> parse_suite(std::string_view name);

struct VerifyRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  int max_n = 7;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Runs one check suite on instances with at most max_n vertices. Throws
/// TooLarge when max_n exceeds the default solver cap.
std::vector<VerifyRow> run_suite(Suite suite, const VerifyOptions& opts);

}  // namespace dibrush
