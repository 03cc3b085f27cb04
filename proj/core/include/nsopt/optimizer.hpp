#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nsopt/bigint.hpp"
#include "nsopt/partition.hpp"
#include "nsopt/radical.hpp"

namespace nsopt {

enum class Method { brute, closed_d2, closed_d3, local, incremental };

std::string_view method_name(Method m);

/// Result of a multiplicity maximization: the maximum value of f over all
/// width-d partitions of n, every partition achieving it (descending
/// lexicographic), and the method that produced it.
struct Optimum {
  int d = 0;
  int n = 0;
  BigInt max_multiplicity;
  std::vector<Partition> argmax;
  Method method = Method::brute;
  bool tie = false;  // argmax has >= 2 elements
};

/// Threshold quantities of the d=3 closed form for residue classes of
/// n = 3k + {0,1,2}: exact radicals, their integer ceilings, and exact
/// integrality flags. Integrality of r2/r3/r4 marks the two-maximizer cases.
struct QutritThresholds {
  long long k = 0;
  NestedRadical r0, r0_hat;  // r0_hat is r0 evaluated at k+1
  QuadraticRadical r1, r2, r3, r4;
  long long ceil_r0 = 0, ceil_r0_hat = 0;
  long long ceil_r1 = 0, ceil_r2 = 0, ceil_r3 = 0, ceil_r4 = 0;
  bool r0_integral = false;
  bool r2_integral = false;
  bool r3_integral = false;
  bool r4_integral = false;
};

/// Requires 0 <= k <= 10^9 (keeps the radicands inside 64 bits; the exact
/// comparisons themselves run in big integers).
QutritThresholds qutrit_thresholds(long long k);

struct BruteOptions {
  std::uint64_t budget = 10'000'000;  // refuse larger enumerations
  int jobs = 1;                       // worker threads; result independent of the count
};

/// Exhaustive maximization over all width-d partitions of n.
/// Throws std::invalid_argument when the partition count exceeds the budget.
Optimum maximize_brute(int d, int n, const BruteOptions& opts = {});

/// d=2 closed form, n >= 2: the maximizer is (n-r*, r*) with
/// r* = floor(((n+2) - sqrt(n+2)) / 2), computed exactly. When (n-r*+1, r*-1)
/// achieves the same multiplicity (exactly when n+2 is a perfect square) it
/// is reported as a second maximizer.
Optimum maximize_qubit_closed(int n);

/// The exact r* of the d=2 closed form.
int qubit_r_star(int n);

/// d=3 closed form, n >= 3, covering all three residue branches and both
/// tie families; tie detection is driven by the exact integrality flags and
/// re-verified by evaluating f on the candidates.
Optimum maximize_qutrit_closed(int n);

/// Steepest-ascent hill climb on f over the one-box moves, starting from the
/// most balanced partition, ties in f broken toward the lexicographically
/// larger neighbor. Exact for d in {2,3} in practice; a heuristic for d >= 4
/// (no global guarantee).
Optimum maximize_local(int d, int n);

/// closed form for d in {2,3}; brute force within budget otherwise; local
/// search above budget (writes a heuristic notice to *warn if given).
Optimum maximize_auto(int d, int n, const BruteOptions& opts = {}, std::ostream* warn = nullptr);

/// One necessary-condition move and the exact sign of f(p) - f(move).
/// For d=3 `condition` numbers the six inequalities in their conventional
/// order; for other d the pairs are enumerated lexicographically.
struct MoveCheck {
  int condition = 0;  // 1-based
  int gain = 0;       // part index receiving +1
  int lose = 0;       // part index receiving -1
  bool valid = false; // move stays a partition
  int sign = 0;       // sign of f(p) - f(move); meaningful when valid
  std::optional<Partition> target;
};

struct LocalOptimalityReport {
  Partition p;
  bool is_local_max = false;
  std::vector<MoveCheck> moves;
};

/// True in `is_local_max` iff no one-box move increases f. Signs are
/// computed from the exact ratio of the two formula values (small-factor
/// cancellation), not by subtracting full evaluations.
LocalOptimalityReport check_local_optimality(const Partition& p);

/// Optimum for n+1 derived from a verified optimum for n (d=3 only):
/// a two-element argmax maps to the componentwise maximum; a singleton is
/// extended by evaluating f on its one-box successors. With cross_check set,
/// the componentwise-max rule is re-derived from successor evaluation and a
/// mismatch throws std::logic_error.
Optimum next_maximum(const Optimum& prev, bool cross_check = false);

/// k-families with two maximizers at n = 3k+1 (integral r3).
bool qutrit_tie_k_3k1(long long k);
/// k-families with two maximizers at n = 3k+2 (integral r2 or r4).
bool qutrit_tie_k_3k2(long long k);
/// All n in [n_min, n_max] whose maximum is attained twice, generated from
/// the k-families (not by search).
std::vector<int> qutrit_tie_ns(int n_min, int n_max);

}  // namespace nsopt
