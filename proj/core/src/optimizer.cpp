#include "nsopt/optimizer.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "nsopt/schur_weyl.hpp"

namespace nsopt {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::closed_d2: return "closed_d2";
    case Method::closed_d3: return "closed_d3";
    case Method::local: return "local";
    case Method::incremental: return "incremental";
  }
  return "unknown";
}

QutritThresholds qutrit_thresholds(long long k) {
  if (k < 0 || k > 1'000'000'000)
    throw std::invalid_argument("qutrit_thresholds: k out of range [0, 1e9]");
  QutritThresholds t;
  t.k = k;
  t.r0 = NestedRadical{-3, 3 + 3 * k, 12 + 20 * k + 9 * k * k, 2};
  t.r0_hat = NestedRadical{-3, 6 + 3 * k, 41 + 38 * k + 9 * k * k, 2};
  t.r1 = QuadraticRadical{-10, 60 + 24 * k, 4};
  t.r2 = QuadraticRadical{-9, 49 + 24 * k, 4};
  t.r3 = QuadraticRadical{-8, 40 + 24 * k, 4};
  t.r4 = QuadraticRadical{-7, 49 + 24 * k, 4};
  t.ceil_r0 = ceil_exact(t.r0);
  t.ceil_r0_hat = ceil_exact(t.r0_hat);
  t.ceil_r1 = ceil_exact(t.r1);
  t.ceil_r2 = ceil_exact(t.r2);
  t.ceil_r3 = ceil_exact(t.r3);
  t.ceil_r4 = ceil_exact(t.r4);
  t.r0_integral = is_integral(t.r0);
  t.r2_integral = is_integral(t.r2);
  t.r3_integral = is_integral(t.r3);
  t.r4_integral = is_integral(t.r4);
  return t;
}

namespace {

struct Best {
  BigInt value;
  std::vector<std::vector<int>> argmax;

  void offer(std::span<const int> parts, const BigInt& v) {
    if (argmax.empty() || v > value) {
      value = v;
      argmax.assign(1, std::vector<int>(parts.begin(), parts.end()));
    } else if (v == value) {
      argmax.emplace_back(parts.begin(), parts.end());
    }
  }
};

Optimum finish(int d, int n, Method method, BigInt value, std::vector<std::vector<int>> raw) {
  std::sort(raw.begin(), raw.end(), std::greater<>());
  Optimum opt;
  opt.d = d;
  opt.n = n;
  opt.max_multiplicity = std::move(value);
  for (auto& parts : raw) opt.argmax.emplace_back(std::move(parts), d);
  opt.method = method;
  opt.tie = opt.argmax.size() >= 2;
  return opt;
}

Optimum from_candidates(int d, int n, Method method, const std::vector<Partition>& cands) {
  Best best;
  for (const auto& p : cands) best.offer(std::span<const int>(p.parts()), multiplicity(p));
  return finish(d, n, method, std::move(best.value), std::move(best.argmax));
}

}  // namespace

Optimum maximize_brute(int d, int n, const BruteOptions& opts) {
  if (d < 1) throw std::invalid_argument("maximize_brute: d must be >= 1");
  if (n < 0) throw std::invalid_argument("maximize_brute: n must be >= 0");
  const std::uint64_t count = count_partitions(n, d, opts.budget);
  if (count > opts.budget)
    throw std::invalid_argument("maximize_brute: partition count for (d=" + std::to_string(d) +
                                ", n=" + std::to_string(n) + ") exceeds the budget of " +
                                std::to_string(opts.budget) + " (raise --budget)");

  const int lo = (n + d - 1) / d;
  std::vector<int> firsts;
  for (int v = n; v >= lo; --v) firsts.push_back(v);
  if (firsts.empty()) firsts.push_back(0);  // n == 0

  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(firsts.size())));
  std::vector<Best> results(static_cast<std::size_t>(jobs));

  auto work = [&](int w) {
    Best& local = results[static_cast<std::size_t>(w)];
    for (std::size_t i = static_cast<std::size_t>(w); i < firsts.size(); i += static_cast<std::size_t>(jobs)) {
      for_each_partition_with_first(n, d, firsts[i], [&](std::span<const int> parts) {
        local.offer(parts, multiplicity(parts));
      });
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }

  // Deterministic merge: global maximum, then the union of worker argmax
  // sets, sorted; independent of the worker count.
  Best merged;
  for (auto& r : results) {
    if (r.argmax.empty()) continue;
    if (merged.argmax.empty() || r.value > merged.value) {
      merged = std::move(r);
    } else if (r.value == merged.value) {
      for (auto& a : r.argmax) merged.argmax.push_back(std::move(a));
    }
  }
  return finish(d, n, Method::brute, std::move(merged.value), std::move(merged.argmax));
}

int qubit_r_star(int n) {
  if (n < 2) throw std::invalid_argument("qubit_r_star: n must be >= 2");
  const long long m = n + 2;
  // Largest r with m - 2r >= sqrt(m), i.e. (m - 2r)^2 >= m and m - 2r >= 0.
  auto ok = [m](long long r) {
    const long long e = m - 2 * r;
    return e >= 0 && BigInt(e) * e >= m;
  };
  long long r = (m - floor_sqrt(BigInt(m)).convert_to<long long>()) / 2;
  while (ok(r + 1)) ++r;
  while (!ok(r)) --r;
  return static_cast<int>(r);
}

Optimum maximize_qubit_closed(int n) {
  if (n < 2) throw std::invalid_argument("maximize_qubit_closed: n must be >= 2");
  const int r = qubit_r_star(n);
  std::vector<Partition> cands;
  cands.emplace_back(std::vector<int>{n - r, r}, 2);
  // The runner-up row split ties exactly when n+2 is a perfect square; keep
  // it whenever its value matches so the argmax set is complete.
  if (r >= 1) cands.emplace_back(std::vector<int>{n - r + 1, r - 1}, 2);
  auto opt = from_candidates(2, n, Method::closed_d2, cands);
  const BigInt primary = binomial(n, r) - binomial(n, r - 1);
  if (opt.max_multiplicity != primary)
    throw std::logic_error("maximize_qubit_closed: r* does not achieve the closed-form value");
  return opt;
}

Optimum maximize_qutrit_closed(int n) {
  if (n < 3) throw std::invalid_argument("maximize_qutrit_closed: n must be >= 3");
  const int k = n / 3;
  const int rem = n % 3;
  const auto th = qutrit_thresholds(k);
  std::vector<Partition> cands;
  bool expect_tie = false;

  if (rem == 0) {
    if (th.r0_integral)
      throw std::logic_error("maximize_qutrit_closed: integral r0 (assumed impossible)");
    const int m = static_cast<int>(th.ceil_r0);
    cands.emplace_back(std::vector<int>{k + m, k, k - m}, 3);
  } else if (rem == 1) {
    const int m = static_cast<int>(th.ceil_r3);
    cands.emplace_back(std::vector<int>{k + 1 + m, k, k - m}, 3);
    if (th.r3_integral) {
      cands.emplace_back(std::vector<int>{k + 2 + m, k, k - m - 1}, 3);
      expect_tie = true;
    }
  } else {
    const int c1 = static_cast<int>(th.ceil_r1);
    const int c3 = static_cast<int>(th.ceil_r3);
    const bool middle_row_up = compare_int(c1, th.r2) <= 0 || compare_int(c1, th.r4) >= 0;
    const bool top_row_up = compare_int(c1, th.r2) >= 0 && compare_int(c1, th.r4) <= 0;
    if (middle_row_up) cands.emplace_back(std::vector<int>{k + 1 + c3, k + 1, k - c3}, 3);
    if (top_row_up) cands.emplace_back(std::vector<int>{k + 2 + c1, k, k - c1}, 3);
    expect_tie = th.r2_integral || th.r4_integral;
  }

  auto opt = from_candidates(3, n, Method::closed_d3, cands);
  if (opt.tie != expect_tie)
    throw std::logic_error("maximize_qutrit_closed: tie flag disagrees with exact f values");
  return opt;
}

Optimum maximize_local(int d, int n) {
  if (d < 2) throw std::invalid_argument("maximize_local: d must be >= 2");
  if (n < 1) throw std::invalid_argument("maximize_local: n must be >= 1");
  Partition p = balanced_partition(n, d);
  BigInt f = multiplicity(p);
  for (;;) {
    const auto moves = neighbor_moves(p);  // descending lexicographic
    const Partition* best = nullptr;
    BigInt best_f;
    for (const auto& q : moves) {
      BigInt v = multiplicity(q);
      if (v > f && (best == nullptr || v > best_f)) {  // first hit wins ties
        best = &q;
        best_f = std::move(v);
      }
    }
    if (best == nullptr) break;
    Partition next = *best;
    p = std::move(next);
    f = std::move(best_f);
  }
  Optimum opt;
  opt.d = d;
  opt.n = n;
  opt.max_multiplicity = std::move(f);
  opt.argmax = {std::move(p)};
  opt.method = Method::local;
  opt.tie = false;
  return opt;
}

Optimum maximize_auto(int d, int n, const BruteOptions& opts, std::ostream* warn) {
  if (d == 2 && n >= 2) return maximize_qubit_closed(n);
  if (d == 3 && n >= 3) return maximize_qutrit_closed(n);
  if (count_partitions(n, d, opts.budget) <= opts.budget) return maximize_brute(d, n, opts);
  if (warn)
    *warn << "note: partition count exceeds the brute-force budget; "
             "falling back to local search (heuristic, no global guarantee for d >= 4)\n";
  return maximize_local(d, n);
}

LocalOptimalityReport check_local_optimality(const Partition& p) {
  const int d = p.d();
  // (gain, lose) pairs; for d=3 the conventional order of the six
  // necessary conditions, otherwise lexicographic.
  std::vector<std::pair<int, int>> pairs;
  if (d == 3) {
    pairs = {{0, 1}, {2, 1}, {1, 0}, {1, 2}, {0, 2}, {2, 0}};
  } else {
    for (int g = 0; g < d; ++g)
      for (int l = 0; l < d; ++l)
        if (g != l) pairs.emplace_back(g, l);
  }

  std::vector<long long> a(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] = p.part(i) + d - 1 - i;
  auto vandermonde = [d](const std::vector<long long>& rows) {
    BigInt v = 1;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        v *= rows[static_cast<std::size_t>(i)] - rows[static_cast<std::size_t>(j)];
    return v;
  };
  const BigInt vp = vandermonde(a);

  LocalOptimalityReport report{p, true, {}};
  int index = 0;
  for (auto [gain, lose] : pairs) {
    ++index;
    MoveCheck mc;
    mc.condition = index;
    mc.gain = gain;
    mc.lose = lose;
    std::vector<int> q = p.parts();
    ++q[static_cast<std::size_t>(gain)];
    --q[static_cast<std::size_t>(lose)];
    bool valid = q[static_cast<std::size_t>(lose)] >= 0;
    for (int i = 0; valid && i + 1 < d; ++i)
      valid = q[static_cast<std::size_t>(i)] >= q[static_cast<std::size_t>(i + 1)];
    mc.valid = valid;
    if (valid) {
      // f(move)/f(p) = V(move) * a_lose / (V(p) * (a_gain + 1)); all factors
      // positive, so the difference sign reduces to a cross multiplication.
      std::vector<long long> aq = a;
      ++aq[static_cast<std::size_t>(gain)];
      --aq[static_cast<std::size_t>(lose)];
      const BigInt lhs = vp * (a[static_cast<std::size_t>(gain)] + 1);
      const BigInt rhs = vandermonde(aq) * a[static_cast<std::size_t>(lose)];
      mc.sign = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
      mc.target = Partition(std::move(q), d);
      if (mc.sign < 0) report.is_local_max = false;
    }
    report.moves.push_back(std::move(mc));
  }
  return report;
}

namespace {

Optimum argmax_over(const std::vector<Partition>& cands, int d, int n, Method method) {
  return from_candidates(d, n, method, cands);
}

}  // namespace

Optimum next_maximum(const Optimum& prev, bool cross_check) {
  if (prev.d != 3)
    throw std::invalid_argument("next_maximum: the increment rule is established for d = 3 only");
  if (prev.argmax.empty() || prev.argmax.size() > 2)
    throw std::invalid_argument("next_maximum: expected one or two maximizers");
  const int n1 = prev.n + 1;

  if (prev.argmax.size() == 2) {
    const auto& a = prev.argmax[0].parts();
    const auto& b = prev.argmax[1].parts();
    std::vector<int> c(3);
    for (int i = 0; i < 3; ++i)
      c[static_cast<std::size_t>(i)] = std::max(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    Partition p(std::move(c), 3);
    if (p.n() != n1)
      throw std::logic_error("next_maximum: componentwise max does not land on n+1");
    Optimum opt;
    opt.d = 3;
    opt.n = n1;
    opt.max_multiplicity = multiplicity(p);
    opt.argmax = {p};
    opt.method = Method::incremental;
    opt.tie = false;
    if (cross_check) {
      std::vector<Partition> cands;
      for (const auto& base : prev.argmax)
        for (auto& s : successors(base)) cands.push_back(std::move(s));
      std::sort(cands.begin(), cands.end(), lex_greater);
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      auto alt = argmax_over(cands, 3, n1, Method::incremental);
      if (alt.max_multiplicity != opt.max_multiplicity || alt.argmax.size() != 1 ||
          !(alt.argmax[0] == p))
        throw std::logic_error("next_maximum: componentwise-max rule disagrees with successor evaluation");
    }
    return opt;
  }

  return argmax_over(successors(prev.argmax[0]), 3, n1, Method::incremental);
}

namespace {

bool in_family(long long k, long long c0, long long c1) {
  if (k > 1'000'000'000'000LL)
    throw std::invalid_argument("tie family test: k out of range");
  // k == c0 + c1*q + 6*q^2 for some integer q >= 0
  for (long long q = 0; c0 + c1 * q + 6 * q * q <= k; ++q)
    if (c0 + c1 * q + 6 * q * q == k) return true;
  return false;
}

}  // namespace

bool qutrit_tie_k_3k1(long long k) {
  return in_family(k, 1, 8) || in_family(k, 9, 16);
}

bool qutrit_tie_k_3k2(long long k) {
  return in_family(k, 5, 13) || in_family(k, 10, 17) || in_family(k, 0, 7) || in_family(k, 3, 11);
}

std::vector<int> qutrit_tie_ns(int n_min, int n_max) {
  std::vector<int> out;
  for (long long k = 0; 3 * k + 1 <= n_max; ++k) {
    const long long n1 = 3 * k + 1;
    const long long n2 = 3 * k + 2;
    if (n1 >= n_min && n1 <= n_max && qutrit_tie_k_3k1(k)) out.push_back(static_cast<int>(n1));
    if (n2 >= n_min && n2 <= n_max && qutrit_tie_k_3k2(k)) out.push_back(static_cast<int>(n2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsopt
