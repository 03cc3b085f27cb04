#pragma once

#include <cstdint>

namespace nsopt {

/// (offset + sqrt(radicand)) / denom with radicand >= 0, denom > 0.
/// The optimizer's threshold quantities all have this shape, and their
/// ceilings must be exact: the interesting cases are precisely ties, where
/// floating point rounds unpredictably. Every query below is answered by
/// integer comparisons only (squaring with sign tracking).
struct QuadraticRadical {
  long long offset = 0;
  long long radicand = 0;
  long long denom = 1;

  double approx() const;
};

/// Smallest integer m with m >= value.
long long ceil_exact(const QuadraticRadical& r);

/// True iff the value is an integer (radicand a perfect square and the sum
/// divisible by denom).
bool is_integral(const QuadraticRadical& r);

/// Sign of (c - value): -1, 0, or +1.
int compare_int(long long c, const QuadraticRadical& r);

/// (offset + sqrt(inner_offset + sqrt(inner_radicand))) / denom with
/// inner_radicand >= 0, inner_offset + sqrt(inner_radicand) >= 0, denom > 0.
/// Ceiling queries square twice, tracking the inequality direction at each
/// squaring.
struct NestedRadical {
  long long offset = 0;
  long long inner_offset = 0;
  long long inner_radicand = 0;
  long long denom = 1;

  double approx() const;
};

long long ceil_exact(const NestedRadical& r);
bool is_integral(const NestedRadical& r);

}  // namespace nsopt
