#pragma once

#include <span>
#include <vector>

#include "nsopt/bigint.hpp"
#include "nsopt/partition.hpp"

namespace nsopt {

/// One irreducible block of the algebra generated by the n-fold tensor
/// powers of SU(d): the labeling partition, the block multiplicity f (the
/// noiseless-subsystem dimension) and the irrep dimension g.
struct IrrepBlock {
  Partition partition;
  BigInt multiplicity;
  BigInt dimension;
};

/// Complete block decomposition for n qudits of d levels.
/// Satisfies sum over blocks of multiplicity * dimension == d^n.
struct DecompositionTable {
  int d = 0;
  int n = 0;
  std::vector<IrrepBlock> blocks;
  BigInt total;     // sum of multiplicity * dimension
  BigInt expected;  // d^n
  bool consistent() const { return total == expected; }
};

/// Block multiplicity f(p1,...,pd): with a_i = p_i - i + d,
///   f = n! * prod_{i<j} (a_i - a_j) / prod_i a_i!
/// Evaluated as one exact big-integer division with a zero-remainder check.
/// Equals the number of standard Young tableaux of the shape, so it depends
/// only on the diagram, not on the width d used to store it.
BigInt multiplicity(const Partition& p);
BigInt multiplicity(std::span<const int> parts);

/// Irrep dimension g(p1,...,pd) = prod_{i<j} (p_i - i - p_j + j) / (j - i).
/// Equals the number of semistandard tableaux with entries in {1..d}.
BigInt irrep_dimension(const Partition& p);
BigInt irrep_dimension(std::span<const int> parts);

/// Independent oracle for f: standard-Young-tableaux count by the
/// hook-length formula, n! / prod of hook lengths.
BigInt syt_count_hook(const Partition& p);

/// Independent oracle for g: exhaustive count of fillings with entries in
/// {1..d}, weakly increasing along rows, strictly increasing down columns.
/// Refuses diagrams with more than `cap` boxes (exponential search).
BigInt ssyt_count_brute(const Partition& p, int d, int cap = 12);

/// Full decomposition table for (d, n), one block per partition in
/// descending lexicographic order. Requires d >= 2, n >= 1.
DecompositionTable decomposition(int d, int n);

}  // namespace nsopt
