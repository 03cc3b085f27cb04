#include <doctest.h>

#include <algorithm>

#include "nsopt/optimizer.hpp"
#include "nsopt/schur_weyl.hpp"

using namespace nsopt;

namespace {

std::vector<std::vector<int>> raw(const Optimum& o) {
  std::vector<std::vector<int>> out;
  for (const auto& p : o.argmax) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST_CASE("brute force examples") {
  const auto o34 = maximize_brute(3, 4);
  CHECK(o34.max_multiplicity == 3);
  CHECK(raw(o34) == std::vector<std::vector<int>>{{3, 1, 0}, {2, 1, 1}});
  CHECK(o34.tie);

  const auto o37 = maximize_brute(3, 7);
  CHECK(raw(o37) == std::vector<std::vector<int>>{{4, 2, 1}});
  CHECK(o37.max_multiplicity == 35);
  CHECK(!o37.tie);

  const auto o210 = maximize_brute(2, 10);
  CHECK(o210.max_multiplicity == 90);
  CHECK(raw(o210) == std::vector<std::vector<int>>{{6, 4}});

  const auto o48 = maximize_brute(4, 8);
  CHECK(o48.max_multiplicity == 90);
  CHECK(raw(o48) == std::vector<std::vector<int>>{{4, 2, 1, 1}});
}

TEST_CASE("brute force respects its budget") {
  BruteOptions tiny;
  tiny.budget = 5;
  CHECK_THROWS_WITH_AS(maximize_brute(3, 100, tiny),
                       doctest::Contains("budget of 5"), std::invalid_argument);
  CHECK_NOTHROW(maximize_brute(3, 5, tiny));  // 5 partitions, within budget
}

TEST_CASE("brute force result is independent of the worker count") {
  for (int n : {13, 24, 37}) {
    const auto serial = maximize_brute(3, n, {1'000'000, 1});
    for (int jobs : {2, 3, 7}) {
      const auto parallel = maximize_brute(3, n, {1'000'000, jobs});
      CHECK(serial.max_multiplicity == parallel.max_multiplicity);
      CHECK(raw(serial) == raw(parallel));
    }
  }
}

TEST_CASE("qubit closed form") {
  const auto o7 = maximize_qubit_closed(7);
  CHECK(o7.max_multiplicity == 14);
  CHECK(raw(o7) == std::vector<std::vector<int>>{{5, 2}, {4, 3}});
  CHECK(o7.tie);

  const auto o15 = maximize_qubit_closed(15);
  CHECK(o15.max_multiplicity == 2002);
  CHECK(raw(o15) == std::vector<std::vector<int>>{{9, 6}});
  CHECK(!o15.tie);

  CHECK(qubit_r_star(7) == 3);
  CHECK(qubit_r_star(15) == 6);
  CHECK(qubit_r_star(2) == 1);
  CHECK_THROWS_AS(maximize_qubit_closed(1), std::invalid_argument);

  // ties happen exactly when n + 2 is a perfect square
  for (int n = 2; n <= 200; ++n) {
    const auto o = maximize_qubit_closed(n);
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n + 2))));
    CHECK(o.tie == (root * root == n + 2));
  }
}

TEST_CASE("qutrit closed form: known optima") {
  CHECK(raw(maximize_qutrit_closed(7)) == std::vector<std::vector<int>>{{4, 2, 1}});
  CHECK(raw(maximize_qutrit_closed(8)) == std::vector<std::vector<int>>{{4, 3, 1}});
  CHECK(raw(maximize_qutrit_closed(49)) == std::vector<std::vector<int>>{{21, 16, 12}});
  CHECK(raw(maximize_qutrit_closed(50)) == std::vector<std::vector<int>>{{21, 16, 13}});

  const auto o4 = maximize_qutrit_closed(4);
  CHECK(o4.max_multiplicity == 3);
  CHECK(raw(o4) == std::vector<std::vector<int>>{{3, 1, 0}, {2, 1, 1}});
  CHECK(o4.tie);

  const auto o5 = maximize_qutrit_closed(5);
  CHECK(raw(o5) == std::vector<std::vector<int>>{{3, 1, 1}});

  const auto o6 = maximize_qutrit_closed(6);
  CHECK(o6.max_multiplicity == 16);
  CHECK(raw(o6) == std::vector<std::vector<int>>{{3, 2, 1}});

  CHECK_THROWS_AS(maximize_qutrit_closed(2), std::invalid_argument);
}

TEST_CASE("closed forms agree with brute force on a window") {
  for (int n = 2; n <= 120; ++n) {
    const auto closed = maximize_qubit_closed(n);
    const auto brute = maximize_brute(2, n);
    CHECK(closed.max_multiplicity == brute.max_multiplicity);
    CHECK(raw(closed) == raw(brute));
    CHECK(closed.tie == brute.tie);
  }
  for (int n = 3; n <= 120; ++n) {
    const auto closed = maximize_qutrit_closed(n);
    const auto brute = maximize_brute(3, n);
    CHECK(closed.max_multiplicity == brute.max_multiplicity);
    CHECK(raw(closed) == raw(brute));
    CHECK(closed.tie == brute.tie);
  }
}

TEST_CASE("local search finds the stated optima") {
  const auto l210 = maximize_local(2, 10);
  CHECK(l210.argmax[0].parts() == std::vector<int>{6, 4});
  CHECK(l210.max_multiplicity == 90);
  CHECK(l210.method == Method::local);

  const auto l349 = maximize_local(3, 49);
  CHECK(l349.argmax[0].parts() == std::vector<int>{21, 16, 12});

  const auto l48 = maximize_local(4, 8);
  const auto b48 = maximize_brute(4, 8);
  CHECK(l48.max_multiplicity == b48.max_multiplicity);

  // reaches the global maximum value across a sweep for d = 2, 3
  for (int n = 1; n <= 80; ++n)
    CHECK(maximize_local(2, n).max_multiplicity == maximize_brute(2, n).max_multiplicity);
  for (int n = 1; n <= 80; ++n)
    CHECK(maximize_local(3, n).max_multiplicity == maximize_brute(3, n).max_multiplicity);
}

TEST_CASE("local optimality reports") {
  const auto good = check_local_optimality(Partition({4, 2, 1}, 3));
  CHECK(good.is_local_max);
  CHECK(good.moves.size() == 6);

  const auto bad = check_local_optimality(Partition({3, 3, 1}, 3));
  CHECK(!bad.is_local_max);

  for (int n = 3; n <= 40; ++n) {
    const auto r = check_local_optimality(Partition({n, 0}, 2));
    CHECK(!r.is_local_max);  // f(n-1,1) = n-1 beats f(n,0) = 1
  }

  // every reported sign matches direct subtraction
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : enumerate_partitions(n, 3)) {
      const auto report = check_local_optimality(p);
      const BigInt fp = multiplicity(p);
      for (const auto& mc : report.moves) {
        if (!mc.valid) continue;
        const BigInt diff = fp - multiplicity(*mc.target);
        const int direct = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
        CHECK(mc.sign == direct);
      }
    }
  }

  // maximizers are local maxima
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 30; ++n)
      for (const auto& p : maximize_brute(d, n).argmax)
        CHECK(check_local_optimality(p).is_local_max);
}

TEST_CASE("next_maximum follows the increment rules") {
  // tie at n=4 resolves by componentwise max to (3,1,1)
  const auto o4 = maximize_qutrit_closed(4);
  const auto o5 = next_maximum(o4, /*cross_check=*/true);
  CHECK(o5.n == 5);
  CHECK(raw(o5) == std::vector<std::vector<int>>{{3, 1, 1}});
  CHECK(o5.method == Method::incremental);

  // unique optimum extends by successor evaluation
  const auto o7 = maximize_qutrit_closed(7);
  const auto o8 = next_maximum(o7);
  CHECK(raw(o8) == std::vector<std::vector<int>>{{4, 3, 1}});

  // chain reproduces brute force
  Optimum chain = maximize_brute(3, 3);
  for (int n = 3; n < 80; ++n) {
    chain = next_maximum(chain, /*cross_check=*/true);
    const auto brute = maximize_brute(3, n + 1);
    CHECK(chain.max_multiplicity == brute.max_multiplicity);
    CHECK(raw(chain) == raw(brute));
    CHECK(chain.tie == brute.tie);
  }

  Optimum wrong_d = maximize_brute(2, 5);
  CHECK_THROWS_AS(next_maximum(wrong_d), std::invalid_argument);
}

TEST_CASE("decrementing an optimum at n+1 reaches the optimum value at n") {
  for (int n = 3; n < 60; ++n) {
    const auto lower = maximize_brute(3, n);
    const auto upper = maximize_brute(3, n + 1);
    for (const auto& p : upper.argmax) {
      BigInt best = 0;
      for (int i = 0; i < 3; ++i) {
        auto parts = p.parts();
        --parts[static_cast<std::size_t>(i)];
        if (parts[static_cast<std::size_t>(i)] < 0) continue;
        bool ok = true;
        for (int j = 0; j + 1 < 3; ++j)
          ok = ok && parts[static_cast<std::size_t>(j)] >= parts[static_cast<std::size_t>(j + 1)];
        if (!ok) continue;
        best = std::max(best, multiplicity(Partition(parts, 3)));
      }
      CHECK(best == lower.max_multiplicity);
    }
  }
}

TEST_CASE("tie families and observed ties coincide") {
  std::vector<int> observed;
  for (int n = 3; n <= 150; ++n) {
    const auto o = maximize_brute(3, n);
    CHECK(o.argmax.size() <= 2);
    if (o.argmax.size() == 2) observed.push_back(n);
  }
  CHECK(observed == qutrit_tie_ns(3, 150));
  // first instances
  const auto families = qutrit_tie_ns(3, 50);
  CHECK(std::find(families.begin(), families.end(), 4) != families.end());
  CHECK(std::find(families.begin(), families.end(), 11) != families.end());
  CHECK(std::find(families.begin(), families.end(), 17) != families.end());
}

TEST_CASE("maximize_auto picks a sensible method") {
  CHECK(maximize_auto(2, 50).method == Method::closed_d2);
  CHECK(maximize_auto(3, 50).method == Method::closed_d3);
  CHECK(maximize_auto(4, 20).method == Method::brute);
  BruteOptions tiny;
  tiny.budget = 3;
  const auto heuristic = maximize_auto(4, 30, tiny);
  CHECK(heuristic.method == Method::local);
}
