#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nsopt {

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Outcome of one named invariant sweep. `pass` holds iff no counterexample
/// was found; at most a handful of counterexamples are retained
/// (`dropped` counts the rest). `elapsed` is diagnostic only and is kept out
/// of the serialized stdout formats so output stays byte-deterministic.
struct VerificationReport {
  std::string check;
  std::string range;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  std::size_t dropped = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Range overrides for a sweep; zero fields fall back to the per-check
/// defaults listed in verification_check_names() documentation.
struct VerifyParams {
  int d = 0;
  int nmax = 0;
  int kmax = 0;
  std::uint64_t budget = 10'000'000;
  int jobs = 1;
};

/// The named checks, in a stable order:
///   dimension-sum      sum of f*g == d^n, d in {2,3,4}, n <= 10
///   hook-oracle        f == hook-length SYT count, n <= 12, d <= 4
///   ssyt-oracle        g == brute semistandard count, n <= 12, d <= 4
///   closed-form-d2     closed form == brute force, 2 <= n <= 1000
///   closed-form-d3     closed form == brute force (full argmax), 3 <= n <= 500
///   local-optimality   every brute maximizer is a local maximum, n <= 60
///   mbm-chain          incremental chain from n=3 == brute force, n <= 300
///   tie-families       two-maximizer n values == the k-families, n <= 300
///   rate-bounds        balanced-rate bounds and monotonicity, k <= 50
///   quadratic-sign-d2  row-split difference sign == quadratic sign, n <= 200
std::vector<std::string> verification_check_names();

/// Runs one named sweep. Throws std::invalid_argument for an unknown name.
VerificationReport run_verification(std::string_view check, const VerifyParams& params = {});

}  // namespace nsopt
