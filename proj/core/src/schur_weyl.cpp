#include "nsopt/schur_weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace nsopt {

namespace {

// Shifted row lengths a_i = p_i - i + d (1-based i): strictly decreasing,
// nonnegative. Both formulas are Vandermonde-style products over them.
std::vector<int> shifted_rows(std::span<const int> parts) {
  const int d = static_cast<int>(parts.size());
  std::vector<int> a(parts.size());
  for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + d - 1 - i;
  return a;
}

BigInt vandermonde(const std::vector<int>& a) {
  BigInt v = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) v *= a[i] - a[j];
  return v;
}

}  // namespace

BigInt multiplicity(std::span<const int> parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  auto& fact = factorials();
  const auto a = shifted_rows(parts);
  BigInt num = fact[n] * vandermonde(a);
  BigInt den = 1;
  for (int ai : a) den *= fact[ai];
  return exact_div(num, den, "multiplicity");
}

BigInt multiplicity(const Partition& p) { return multiplicity(std::span<const int>(p.parts())); }

BigInt irrep_dimension(std::span<const int> parts) {
  const auto a = shifted_rows(parts);
  auto& fact = factorials();
  BigInt den = 1;  // prod_{i<j} (j - i) = 1! 2! ... (d-1)!
  for (int l = 1; l < static_cast<int>(parts.size()); ++l) den *= fact[l];
  return exact_div(vandermonde(a), den, "irrep_dimension");
}

BigInt irrep_dimension(const Partition& p) {
  return irrep_dimension(std::span<const int>(p.parts()));
}

BigInt syt_count_hook(const Partition& p) {
  auto& fact = factorials();
  // Column lengths of the diagram (conjugate partition).
  std::vector<int> cols;
  if (p.n() > 0) {
    cols.resize(static_cast<std::size_t>(p.part(0)), 0);
    for (int i = 0; i < p.d(); ++i)
      for (int c = 0; c < p.part(i); ++c) ++cols[static_cast<std::size_t>(c)];
  }
  BigInt hooks = 1;
  for (int i = 0; i < p.d(); ++i) {
    for (int c = 0; c < p.part(i); ++c) {
      const int arm = p.part(i) - c - 1;
      const int leg = cols[static_cast<std::size_t>(c)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return exact_div(fact[p.n()], hooks, "syt_count_hook");
}

BigInt ssyt_count_brute(const Partition& p, int d, int cap) {
  if (d < 1) throw std::invalid_argument("ssyt_count_brute: d must be >= 1");
  if (p.n() > cap)
    throw std::invalid_argument("ssyt_count_brute: diagram has " + std::to_string(p.n()) +
                                " boxes, above the brute-force cap of " + std::to_string(cap));
  // Cells in row-major order; each candidate entry must be >= the cell to
  // the left and > the cell above.
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < p.d(); ++r)
    for (int c = 0; c < p.part(r); ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(p.d()));
  for (int r = 0; r < p.d(); ++r) fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(p.part(r)), 0);

  BigInt count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= d; ++v) {
      fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return count;
}

DecompositionTable decomposition(int d, int n) {
  if (d < 2) throw std::invalid_argument("decomposition: d must be >= 2");
  if (n < 1) throw std::invalid_argument("decomposition: n must be >= 1");
  DecompositionTable table;
  table.d = d;
  table.n = n;
  table.expected = int_pow(d, static_cast<unsigned>(n));
  table.total = 0;
  for_each_partition(n, d, [&](std::span<const int> parts) {
    IrrepBlock block{Partition(std::vector<int>(parts.begin(), parts.end()), d),
                     multiplicity(parts), irrep_dimension(parts)};
    table.total += block.multiplicity * block.dimension;
    table.blocks.push_back(std::move(block));
  });
  return table;
}

}  // namespace nsopt
