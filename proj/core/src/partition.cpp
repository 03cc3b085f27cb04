#include "nsopt/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nsopt {

namespace {

void check_n_d(int n, int d) {
  if (n < 0) throw std::invalid_argument("partition: n must be >= 0");
  if (d < 1) throw std::invalid_argument("partition: d must be >= 1");
}

// Fills buf[pos..] with weakly decreasing entries <= max_part summing to
// `remaining`, visiting suffixes in descending lexicographic order.
void emit_suffixes(std::vector<int>& buf, std::size_t pos, int remaining, int max_part,
                   const std::function<void(std::span<const int>)>& fn) {
  const std::size_t d = buf.size();
  if (pos + 1 == d) {
    if (remaining <= max_part) {
      buf[pos] = remaining;
      fn(std::span<const int>(buf));
    }
    return;
  }
  const int slots = static_cast<int>(d - pos);
  const int lo = (remaining + slots - 1) / slots;  // keep the tail feasible
  for (int v = std::min(remaining, max_part); v >= lo; --v) {
    buf[pos] = v;
    emit_suffixes(buf, pos + 1, remaining - v, v, fn);
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t sat) {
  std::uint64_t s = a + b;
  return s >= sat ? sat : s;
}

}  // namespace

Partition::Partition(std::vector<int> parts, int d) {
  if (d < 1) throw std::invalid_argument("partition: d must be >= 1");
  int nonzero = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition: negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
    if (parts[i] > 0) ++nonzero;
  }
  if (nonzero > d)
    throw std::invalid_argument("partition: more than d nonzero parts");
  parts.resize(static_cast<std::size_t>(d), 0);
  const long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
  if (total > std::numeric_limits<int>::max())
    throw std::invalid_argument("partition: total exceeds the machine-int range");
  parts_ = std::move(parts);
  n_ = static_cast<int>(total);
}

std::string Partition::str(char sep) const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

bool lex_greater(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();
}

void for_each_partition(int n, int d, const std::function<void(std::span<const int>)>& fn) {
  check_n_d(n, d);
  std::vector<int> buf(static_cast<std::size_t>(d), 0);
  emit_suffixes(buf, 0, n, n, fn);
}

void for_each_partition_with_first(int n, int d, int first,
                                   const std::function<void(std::span<const int>)>& fn) {
  check_n_d(n, d);
  const int lo = (n + d - 1) / d;
  if (first < lo || first > n)
    throw std::invalid_argument("for_each_partition_with_first: first part out of range");
  std::vector<int> buf(static_cast<std::size_t>(d), 0);
  buf[0] = first;
  if (d == 1) {
    fn(std::span<const int>(buf));
    return;
  }
  emit_suffixes(buf, 1, n - first, first, fn);
}

std::vector<Partition> enumerate_partitions(int n, int d) {
  std::vector<Partition> out;
  for_each_partition(n, d, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()), d);
  });
  return out;
}

std::uint64_t count_partitions(int n, int d, std::uint64_t cap) {
  check_n_d(n, d);
  if (cap == std::numeric_limits<std::uint64_t>::max())
    throw std::invalid_argument("count_partitions: cap too large");
  const std::uint64_t exceeded = cap + 1;
  if (n == 0) return 1;
  d = std::min(d, n);  // more than n parts never helps
  if (d == 1) return 1;
  const std::uint64_t two_part = static_cast<std::uint64_t>(n) / 2 + 1;
  if (d == 2) return std::min(two_part, exceeded);
  if (two_part > cap) return exceeded;
  // Partitions into at most 3 parts number about (n+3)^2/12, a lower bound
  // for every d >= 3; it lets us refuse before running a large table.
  const unsigned long long m = static_cast<unsigned long long>(n) + 3;
  if (m * m / 12 > cap + 1) return exceeded;
  if (n > 50'000'000)
    throw std::invalid_argument("count_partitions: n too large for an exact count");

  // c[m] = partitions of m into at most j parts, saturating at `exceeded`.
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 1);  // j = 1
  for (int j = 2; j <= d; ++j) {
    for (int i = j; i <= n; ++i) {
      c[static_cast<std::size_t>(i)] =
          saturating_add(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - j)], exceeded);
    }
  }
  return c[static_cast<std::size_t>(n)];
}

namespace {

bool weakly_decreasing_nonneg(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

}  // namespace

std::vector<Partition> neighbor_moves(const Partition& p) {
  const int d = p.d();
  std::vector<Partition> out;
  for (int gain = 0; gain < d; ++gain) {
    for (int lose = 0; lose < d; ++lose) {
      if (gain == lose) continue;
      std::vector<int> q = p.parts();
      ++q[static_cast<std::size_t>(gain)];
      --q[static_cast<std::size_t>(lose)];
      if (weakly_decreasing_nonneg(q)) out.emplace_back(std::move(q), d);
    }
  }
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

std::vector<Partition> successors(const Partition& p) {
  const int d = p.d();
  std::vector<Partition> out;
  for (int i = 0; i < d; ++i) {
    std::vector<int> q = p.parts();
    ++q[static_cast<std::size_t>(i)];
    if (i == 0 || q[static_cast<std::size_t>(i)] <= q[static_cast<std::size_t>(i - 1)])
      out.emplace_back(std::move(q), d);
  }
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

Partition balanced_partition(int n, int d) {
  check_n_d(n, d);
  const int q = n / d;
  const int r = n % d;
  std::vector<int> parts(static_cast<std::size_t>(d), q);
  for (int i = 0; i < r; ++i) ++parts[static_cast<std::size_t>(i)];
  return Partition(std::move(parts), d);
}

}  // namespace nsopt
