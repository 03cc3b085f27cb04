#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nsopt {

/// Weakly decreasing tuple of d nonnegative integers summing to n.
/// Trailing zeros are stored explicitly, so a partition always carries its
/// width d and row counts stay well-defined without an ambient parameter.
class Partition {
public:
  /// Validates `parts` (weakly decreasing, nonnegative, at most d nonzero
  /// entries) and zero-pads it to width d. Throws std::invalid_argument.
  Partition(std::vector<int> parts, int d);

  int d() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  /// "(p1,p2,...,pd)" with the given separator.
  std::string str(char sep = ',') const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Strict descending-lexicographic order predicate (sorting argmax sets and
/// enumeration output share this order).
bool lex_greater(const Partition& a, const Partition& b);

/// All width-d partitions of n in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int d);

/// Streams every weakly decreasing d-tuple summing to n, descending
/// lexicographic, without materializing Partition objects.
void for_each_partition(int n, int d, const std::function<void(std::span<const int>)>& fn);

/// Same, restricted to tuples whose first entry equals `first`.
/// Requires ceil(n/d) <= first <= n. Used to stripe brute-force sweeps.
void for_each_partition_with_first(int n, int d, int first,
                                   const std::function<void(std::span<const int>)>& fn);

/// Number of partitions of n into at most d parts, saturating at cap + 1.
/// Requires cap < UINT64_MAX.
std::uint64_t count_partitions(int n, int d, std::uint64_t cap);

/// All partitions reachable by moving one box: p plus a vector with exactly
/// one +1 and one -1 entry, kept only when still weakly decreasing and
/// nonnegative. Descending lexicographic order. The move set is symmetric.
std::vector<Partition> neighbor_moves(const Partition& p);

/// All valid partitions of n+1 obtained by adding one box to p.
/// Descending lexicographic order.
std::vector<Partition> successors(const Partition& p);

/// The most balanced width-d partition of n: parts differ by at most one.
Partition balanced_partition(int n, int d);

}  // namespace nsopt
