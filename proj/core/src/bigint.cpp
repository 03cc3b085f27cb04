#include "nsopt/bigint.hpp"

namespace nsopt {

int bit_length(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("bit_length: argument must be >= 1");
  return static_cast<int>(boost::multiprecision::msb(x)) + 1;
}

BigInt floor_sqrt(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("floor_sqrt: argument must be >= 0");
  return boost::multiprecision::sqrt(x);
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::logic_error(std::string(what) + ": non-integral division (implementation bug)");
  return q;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  auto& fact = factorials();
  return exact_div(fact[n], fact[k] * fact[n - k], "binomial");
}

void FactorialTable::ensure(int max) {
  if (max < 0) throw std::invalid_argument("FactorialTable: negative index");
  while (static_cast<int>(fact_.size()) <= max) {
    fact_.push_back(fact_.back() * static_cast<unsigned>(fact_.size()));
  }
}

FactorialTable& factorials() {
  thread_local FactorialTable table;
  return table;
}

}  // namespace nsopt
