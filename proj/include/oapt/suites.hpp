#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oapt/report.hpp"
#include "oapt/rigidity.hpp"

namespace oapt {

struct RunConfig {
  int n_min = 4;
  int n_max = 10;
  /// Empty: every k with 1 < k < n-1.
  std::vector<int> ks;
  /// Empty: every suite.
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// lemma2, case-table, coincidence, resolution, classify, gamma-prime,
/// triple-hull, inexact, compat, witness, rigidity, recovery.
const std::vector<std::string>& suite_names();

/// Runs every selected suite on every (n, k) of the config. Tasks run
/// concurrently; the result is sorted by (suite, n, k) and depends only on
/// the config. Throws InvalidArgument for unknown suites or empty ranges.
VerificationReport run_verify(const RunConfig& config);

/// The config as it is echoed next to a report.
nlohmann::ordered_json config_echo(const RunConfig& config);

/// Statement of what a PASS does and does not establish.
std::string scope_banner();

/// Structural checks on a user-supplied scaffold: non-induced detection and,
/// when n = 2k, the table form of the dimension/perp pattern.
VerificationReport verify_scaffold(const Scaffold& s);

/// One row per (n, k): case tag, c-values for every feasible m, the m values
/// that collide, and whether binom(2k,k-1) = 4 binom(2k-2,k-2).
std::string scan_csv(int n_min, int n_max, const std::vector<int>& ks);

struct WitnessOutput {
  std::string text;
  bool ok = true;
};

/// The base with b_i, b_j replaced by b_i + b_j and |b_j|^2 b_i - |b_i|^2 b_j,
/// plus re-evaluated orthogonality and inexact-subset checks.
WitnessOutput witness_inexact(int n, int k, int i, int j);

/// X = span{e_1..e_k}, Y = span{e_1..e_{k-1}, e_k + e_{k+1}} and `count`
/// witnesses P + (X n Y) compatible with both and with each other.
/// Throws Precondition naming the failing inequality when n-k-1 < count.
WitnessOutput witness_compatible_triple(int n, int k, int count = 3);

}  // namespace oapt
