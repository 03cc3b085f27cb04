#include "nsopt/radical.hpp"

#include <cmath>
#include <stdexcept>

#include "nsopt/bigint.hpp"

namespace nsopt {

namespace {

void check(const QuadraticRadical& r) {
  if (r.radicand < 0 || r.denom <= 0)
    throw std::invalid_argument("QuadraticRadical: need radicand >= 0, denom > 0");
}

void check(const NestedRadical& r) {
  if (r.inner_radicand < 0 || r.denom <= 0)
    throw std::invalid_argument("NestedRadical: need inner_radicand >= 0, denom > 0");
}

// m >= (offset + sqrt(radicand)) / denom
bool int_geq(long long m, const QuadraticRadical& r) {
  const BigInt e = BigInt(m) * r.denom - r.offset;
  if (e < 0) return false;
  return e * e >= r.radicand;
}

// m >= (offset + sqrt(inner_offset + sqrt(inner_radicand))) / denom
bool int_geq(long long m, const NestedRadical& r) {
  const BigInt e = BigInt(m) * r.denom - r.offset;
  if (e < 0) return false;
  const BigInt h = e * e - r.inner_offset;
  if (h < 0) return false;
  return h * h >= r.inner_radicand;
}

template <typename Rad>
long long ceil_from_estimate(double estimate, const Rad& r) {
  long long m = static_cast<long long>(std::ceil(estimate)) - 2;
  while (!int_geq(m, r)) ++m;
  while (int_geq(m - 1, r)) --m;
  return m;
}

}  // namespace

double QuadraticRadical::approx() const {
  return (static_cast<double>(offset) + std::sqrt(static_cast<double>(radicand))) /
         static_cast<double>(denom);
}

double NestedRadical::approx() const {
  return (static_cast<double>(offset) +
          std::sqrt(static_cast<double>(inner_offset) +
                    std::sqrt(static_cast<double>(inner_radicand)))) /
         static_cast<double>(denom);
}

long long ceil_exact(const QuadraticRadical& r) {
  check(r);
  return ceil_from_estimate(r.approx(), r);
}

bool is_integral(const QuadraticRadical& r) {
  check(r);
  const BigInt t = floor_sqrt(BigInt(r.radicand));
  if (t * t != r.radicand) return false;
  const long long sum = r.offset + t.convert_to<long long>();
  return ((sum % r.denom) + r.denom) % r.denom == 0;
}

int compare_int(long long c, const QuadraticRadical& r) {
  check(r);
  const BigInt e = BigInt(c) * r.denom - r.offset;
  if (e < 0) return -1;
  const BigInt diff = e * e - r.radicand;
  return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
}

long long ceil_exact(const NestedRadical& r) {
  check(r);
  return ceil_from_estimate(r.approx(), r);
}

bool is_integral(const NestedRadical& r) {
  check(r);
  const long long m = ceil_exact(r);
  // value == m iff (m*denom - offset)^2 - inner_offset == sqrt(inner_radicand)
  const BigInt e = BigInt(m) * r.denom - r.offset;
  if (e < 0) return false;
  const BigInt h = e * e - r.inner_offset;
  if (h < 0) return false;
  return h * h == r.inner_radicand;
}

}  // namespace nsopt
