#pragma once

#include <vector>

#include "nsopt/bigint.hpp"
#include "nsopt/partition.hpp"

namespace nsopt {

/// log of x in the given base (base > 1, x >= 1), absolute error <= 1e-9.
/// Computed from the bit length and the leading 64 bits of x; never by
/// converting x to a fixed-width float, so it works for thousands of bits.
double log_big(const BigInt& x, double base);

/// Error-correction rate of the code on partition p: protected qudits per
/// physical qudit, log_d(multiplicity(p)) / n. Requires n >= 1.
double code_rate(const Partition& p);

struct RateEntry {
  int k = 0;
  int n = 0;        // d * k
  double rate = 0;  // in [0, 1]
  int f_bits = 0;   // bit length of the multiplicity
};

/// Rates of the balanced partitions (k,...,k); the sequence approaches 1.
struct RateSeries {
  int d = 0;
  std::vector<RateEntry> entries;
};

/// Entries for k = 1..k_max. Requires d >= 2, k_max >= 1.
RateSeries balanced_rate_series(int d, int k_max);

}  // namespace nsopt
