#include "nsopt/rates.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "nsopt/schur_weyl.hpp"

namespace nsopt {

double log_big(const BigInt& x, double base) {
  if (x < 1) throw std::invalid_argument("log_big: x must be >= 1");
  if (!(base > 1.0)) throw std::invalid_argument("log_big: base must be > 1");
  const int bits = bit_length(x);
  double l2;
  if (bits <= 64) {
    l2 = std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  } else {
    const BigInt top = x >> (bits - 64);
    l2 = std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(bits - 64);
  }
  return base == 2.0 ? l2 : l2 / std::log2(base);
}

double code_rate(const Partition& p) {
  if (p.n() < 1) throw std::invalid_argument("code_rate: n must be >= 1");
  if (p.d() < 2) throw std::invalid_argument("code_rate: d must be >= 2");
  return log_big(multiplicity(p), static_cast<double>(p.d())) / p.n();
}

RateSeries balanced_rate_series(int d, int k_max) {
  if (d < 2) throw std::invalid_argument("balanced_rate_series: d must be >= 2");
  if (k_max < 1) throw std::invalid_argument("balanced_rate_series: k_max must be >= 1");
  RateSeries series;
  series.d = d;
  series.entries.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> parts(static_cast<std::size_t>(d), k);
    Partition p(std::move(parts), d);
    const BigInt f = multiplicity(p);
    RateEntry e;
    e.k = k;
    e.n = d * k;
    e.rate = log_big(f, static_cast<double>(d)) / e.n;
    e.f_bits = bit_length(f);
    series.entries.push_back(e);
  }
  return series;
}

}  // namespace nsopt
