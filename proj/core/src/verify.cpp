#include "nsopt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nsopt/optimizer.hpp"
#include "nsopt/rates.hpp"
#include "nsopt/report.hpp"
#include "nsopt/schur_weyl.hpp"

namespace nsopt {

namespace {

constexpr std::size_t kMaxCounterexamples = 16;

class Sink {
public:
  explicit Sink(VerificationReport& report) : report_(report) {}

  void fail(std::string input, std::string expected, std::string actual) {
    report_.pass = false;
    if (report_.counterexamples.size() < kMaxCounterexamples)
      report_.counterexamples.push_back(
          {std::move(input), std::move(expected), std::move(actual)});
    else
      ++report_.dropped;
  }

private:
  VerificationReport& report_;
};

std::string optimum_brief(const Optimum& o) {
  std::string s = "f=" + o.max_multiplicity.str() + " argmax=";
  for (std::size_t i = 0; i < o.argmax.size(); ++i) {
    if (i) s += ' ';
    s += o.argmax[i].str(';');
  }
  s += o.tie ? " tie" : " unique";
  return s;
}

bool same_optimum(const Optimum& a, const Optimum& b) {
  if (a.max_multiplicity != b.max_multiplicity || a.tie != b.tie ||
      a.argmax.size() != b.argmax.size())
    return false;
  for (std::size_t i = 0; i < a.argmax.size(); ++i)
    if (!(a.argmax[i] == b.argmax[i])) return false;
  return true;
}

void check_dimension_sum(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 10;
  std::vector<int> ds = p.d > 0 ? std::vector<int>{p.d} : std::vector<int>{2, 3, 4};
  r.range = "d in " + std::to_string(ds.front()) + ".." + std::to_string(ds.back()) +
            "; 1 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  for (int d : ds) {
    for (int n = 1; n <= nmax; ++n) {
      const auto table = decomposition(d, n);
      if (!table.consistent())
        sink.fail("d=" + std::to_string(d) + " n=" + std::to_string(n), table.expected.str(),
                  table.total.str());
    }
  }
}

void check_hook_oracle(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 12;
  const int dmax = p.d > 0 ? p.d : 4;
  r.range = "d in 1.." + std::to_string(dmax) + "; 1 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  for (int d = 1; d <= dmax; ++d)
    for (int n = 1; n <= nmax; ++n)
      for (const auto& part : enumerate_partitions(n, d)) {
        const BigInt f = multiplicity(part);
        const BigInt oracle = syt_count_hook(part);
        if (f != oracle)
          sink.fail("d=" + std::to_string(d) + " p=" + part.str(';'), oracle.str(), f.str());
      }
}

void check_ssyt_oracle(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 12;
  const int dmax = p.d > 0 ? p.d : 4;
  r.range = "d in 1.." + std::to_string(dmax) + "; 1 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  for (int d = 1; d <= dmax; ++d)
    for (int n = 1; n <= nmax; ++n)
      for (const auto& part : enumerate_partitions(n, d)) {
        const BigInt g = irrep_dimension(part);
        const BigInt oracle = ssyt_count_brute(part, d, nmax);
        if (g != oracle)
          sink.fail("d=" + std::to_string(d) + " p=" + part.str(';'), oracle.str(), g.str());
      }
}

void check_closed_d2(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 1000;
  r.range = "2 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  const BruteOptions opts{p.budget, p.jobs};
  for (int n = 2; n <= nmax; ++n) {
    const auto closed = maximize_qubit_closed(n);
    const auto brute = maximize_brute(2, n, opts);
    if (!same_optimum(closed, brute))
      sink.fail("n=" + std::to_string(n), optimum_brief(brute), optimum_brief(closed));
  }
}

void check_closed_d3(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 500;
  r.range = "3 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  const BruteOptions opts{p.budget, p.jobs};
  for (int n = 3; n <= nmax; ++n) {
    const auto closed = maximize_qutrit_closed(n);
    const auto brute = maximize_brute(3, n, opts);
    if (!same_optimum(closed, brute))
      sink.fail("n=" + std::to_string(n), optimum_brief(brute), optimum_brief(closed));
  }
}

void check_local_optimality_sweep(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 60;
  std::vector<int> ds = p.d > 0 ? std::vector<int>{p.d} : std::vector<int>{2, 3, 4};
  r.range = "d in " + std::to_string(ds.front()) + ".." + std::to_string(ds.back()) +
            "; 1 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  const BruteOptions opts{p.budget, p.jobs};
  for (int d : ds) {
    for (int n = 1; n <= nmax; ++n) {
      const auto brute = maximize_brute(d, n, opts);
      for (const auto& part : brute.argmax) {
        const auto report = nsopt::check_local_optimality(part);
        if (!report.is_local_max)
          sink.fail("d=" + std::to_string(d) + " p=" + part.str(';'), "local maximum",
                    "an improving one-box move exists");
      }
    }
  }
  // For d=3 the six per-move signs must agree with direct subtraction of
  // the two formula values.
  const int sign_nmax = std::min(nmax, 30);
  for (int n = 1; n <= sign_nmax; ++n) {
    for (const auto& part : enumerate_partitions(n, 3)) {
      const auto report = nsopt::check_local_optimality(part);
      const BigInt fp = multiplicity(part);
      for (const auto& mc : report.moves) {
        if (!mc.valid) continue;
        const BigInt diff = fp - multiplicity(*mc.target);
        const int direct = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
        if (direct != mc.sign)
          sink.fail("p=" + part.str(';') + " condition " + std::to_string(mc.condition),
                    std::to_string(direct), std::to_string(mc.sign));
      }
    }
  }
}

void check_mbm_chain(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 300;
  r.range = "3 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  const BruteOptions opts{p.budget, p.jobs};
  Optimum chain = maximize_brute(3, 3, opts);
  for (int n = 3; n < nmax; ++n) {
    Optimum next = next_maximum(chain, /*cross_check=*/true);
    const Optimum brute = maximize_brute(3, n + 1, opts);
    if (!same_optimum(next, brute))
      sink.fail("n=" + std::to_string(n + 1), optimum_brief(brute), optimum_brief(next));
    chain = std::move(next);
  }
}

void check_tie_families(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 300;
  r.range = "3 <= n <= " + std::to_string(nmax);
  Sink sink(r);
  const BruteOptions opts{p.budget, p.jobs};
  std::set<int> observed;
  for (int n = 3; n <= nmax; ++n) {
    const auto brute = maximize_brute(3, n, opts);
    if (brute.argmax.size() > 2)
      sink.fail("n=" + std::to_string(n), "at most two maximizers",
                std::to_string(brute.argmax.size()) + " maximizers");
    if (brute.argmax.size() == 2) observed.insert(n);
  }
  const auto family = qutrit_tie_ns(3, nmax);
  const std::set<int> predicted(family.begin(), family.end());
  for (int n : observed)
    if (!predicted.count(n))
      sink.fail("n=" + std::to_string(n), "unique maximum (not in a tie family)", "two maximizers");
  for (int n : predicted)
    if (!observed.count(n))
      sink.fail("n=" + std::to_string(n), "two maximizers (tie family)", "unique maximum");
}

void check_rate_bounds(const VerifyParams& p, VerificationReport& r) {
  const int kmax = p.kmax > 0 ? p.kmax : 50;
  r.range = "d in {2;3}; 1 <= k <= " + std::to_string(std::max(kmax, 50));
  Sink sink(r);
  constexpr double tol = 1e-9;

  const auto series2 = balanced_rate_series(2, std::max(kmax, 50));
  const auto series3 = balanced_rate_series(3, std::max(kmax, 30));
  const double rate2_50 = series2.entries[49].rate;
  const double rate3_30 = series3.entries[29].rate;
  if (!(rate2_50 >= 0.90 - tol))
    sink.fail("d=2 k=50", ">= 0.90", format_significant(rate2_50));
  if (!(rate3_30 >= 0.85 - tol))
    sink.fail("d=3 k=30", ">= 0.85", format_significant(rate3_30));

  for (const auto* series : {&series2, &series3}) {
    for (const auto& e : series->entries) {
      if (!(e.rate >= 0.0 && e.rate <= 1.0 + tol))
        sink.fail("d=" + std::to_string(series->d) + " k=" + std::to_string(e.k),
                  "rate in [0,1]", format_significant(e.rate));
      if (e.k >= 2 && !(e.rate > 0.0))
        sink.fail("d=" + std::to_string(series->d) + " k=" + std::to_string(e.k),
                  "rate > 0", format_significant(e.rate));
    }
    // 1 - rate shrinks monotonically over the tested window.
    for (std::size_t i = 5; i < series->entries.size() &&
                            series->entries[i].k <= kmax; ++i) {
      const double prev = 1.0 - series->entries[i - 1].rate;
      const double cur = 1.0 - series->entries[i].rate;
      if (!(cur < prev))
        sink.fail("d=" + std::to_string(series->d) + " k=" + std::to_string(series->entries[i].k),
                  "1-rate decreasing", format_significant(cur) + " vs " + format_significant(prev));
    }
  }

  // Exact identity for the even d=2 balanced split:
  // f(k,k) = C(2k,k) - C(2k,k-1) = (2k)! / (k! (k+1)!).
  for (int k = 1; k <= std::max(kmax, 200); ++k) {
    auto& fact = factorials();
    const BigInt lhs = binomial(2 * k, k) - binomial(2 * k, k - 1);
    const BigInt rhs = exact_div(fact[2 * k], fact[k] * fact[k + 1], "rate-bounds identity");
    if (lhs != rhs) sink.fail("k=" + std::to_string(k), rhs.str(), lhs.str());
  }
}

void check_quadratic_sign_d2(const VerifyParams& p, VerificationReport& r) {
  const int nmax = p.nmax > 0 ? p.nmax : 200;
  r.range = "4 <= n <= " + std::to_string(nmax) + "; 2 <= r <= n/2";
  Sink sink(r);
  for (int n = 4; n <= nmax; ++n) {
    for (int r2 = 2; r2 <= n / 2; ++r2) {
      const BigInt diff = (binomial(n, r2) - binomial(n, r2 - 1)) -
                          (binomial(n, r2 - 1) - binomial(n, r2 - 2));
      const BigInt quad = BigInt(n + 1) * (n + 2) - BigInt(4) * (n + 2) * r2 + BigInt(4) * r2 * r2;
      const int sd = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
      const int sq = quad > 0 ? 1 : (quad < 0 ? -1 : 0);
      if (sd != sq)
        sink.fail("n=" + std::to_string(n) + " r=" + std::to_string(r2), std::to_string(sq),
                  std::to_string(sd));
    }
  }
}

using CheckFn = void (*)(const VerifyParams&, VerificationReport&);

struct CheckEntry {
  const char* name;
  CheckFn fn;
};

constexpr CheckEntry kChecks[] = {
    {"dimension-sum", check_dimension_sum},
    {"hook-oracle", check_hook_oracle},
    {"ssyt-oracle", check_ssyt_oracle},
    {"closed-form-d2", check_closed_d2},
    {"closed-form-d3", check_closed_d3},
    {"local-optimality", check_local_optimality_sweep},
    {"mbm-chain", check_mbm_chain},
    {"tie-families", check_tie_families},
    {"rate-bounds", check_rate_bounds},
    {"quadratic-sign-d2", check_quadratic_sign_d2},
};

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const auto& entry : kChecks) names.emplace_back(entry.name);
  return names;
}

VerificationReport run_verification(std::string_view check, const VerifyParams& params) {
  for (const auto& entry : kChecks) {
    if (check == entry.name) {
      VerificationReport report;
      report.check = entry.name;
      const auto start = std::chrono::steady_clock::now();
      entry.fn(params, report);
      report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      return report;
    }
  }
  throw std::invalid_argument("unknown check '" + std::string(check) +
                              "'; known checks: dimension-sum, hook-oracle, ssyt-oracle, "
                              "closed-form-d2, closed-form-d3, local-optimality, mbm-chain, "
                              "tie-families, rate-bounds, quadratic-sign-d2");
}

}  // namespace nsopt
