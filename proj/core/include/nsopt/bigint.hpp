#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsopt {

using BigInt = boost::multiprecision::cpp_int;

/// Number of bits in x; bit_length(1) == 1. Requires x >= 1.
int bit_length(const BigInt& x);

/// Floor of the square root. Requires x >= 0.
BigInt floor_sqrt(const BigInt& x);

BigInt int_pow(const BigInt& base, unsigned exp);

/// Quotient num/den; throws std::logic_error (tagged with `what`) unless
/// den divides num exactly. The zero-remainder check doubles as an
/// integrality self-check for the combinatorial formulas built on top.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Growing memo of factorials 0! .. max!.
class FactorialTable {
public:
  FactorialTable() { fact_.emplace_back(1); }

  const BigInt& operator[](int i) {
    ensure(i);
    return fact_[static_cast<std::size_t>(i)];
  }

  void ensure(int max);

private:
  std::vector<BigInt> fact_;
};

/// Thread-local factorial memo shared by the formula evaluators. Each
/// thread owns its table, so concurrent evaluation needs no locking and
/// results do not depend on the parallel schedule.
FactorialTable& factorials();

}  // namespace nsopt
