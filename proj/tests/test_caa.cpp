#include <doctest.h>

#include <chrono>
#include <numeric>
#include <set>

#include "ratt/caa.hpp"
#include "ratt/errors.hpp"
#include "ratt/objective.hpp"

using namespace ratt;

TEST_CASE("ebar table for five robots") {
  CHECK(ebar(5, 1) == 0);
  CHECK(ebar(5, 2) == 2);
  CHECK(ebar(5, 3) == 4);
  CHECK(ebar(5, 4) == 6);
  CHECK(ebar(5, 5) == 10);
}

TEST_CASE("ebar of singletons is zero for any team size") {
  for (int n = 1; n <= 40; ++n) CHECK(ebar(n, 1) == 0);
}

TEST_CASE("ebar of two five-cliques") {
  // q=2, r=0: twice the edges of a 5-clique
  CHECK(ebar(10, 5) == 20);
}

TEST_CASE("ebar is non-decreasing in the subgroup size") {
  for (int n_robots = 1; n_robots <= 64; ++n_robots) {
    for (int n = 1; n < n_robots; ++n) {
      CHECK(ebar(n_robots, n) <= ebar(n_robots, n + 1));
    }
  }
}

TEST_CASE("caa reproduces the worked examples") {
  const CaaResult a = caa(5, 7);
  CHECK(a.e_r == 3);
  CHECK(a.n_max == 3);
  CHECK(a.alpha_cs == 2);
  CHECK(a.ebar == std::vector<long long>{0, 2, 4, 6, 10});

  const CaaResult b = caa(4, 4);
  CHECK(b.n_max == 2);
  CHECK(b.alpha_cs == 2);

  const CaaResult c = caa(10, 29);
  CHECK(c.n_max == 5);
  CHECK(c.alpha_cs == 5);
}

TEST_CASE("caa with zero budget keeps the whole team") {
  for (int n = 1; n <= 30; ++n) {
    const CaaResult r = caa(n, 0);
    CHECK(r.n_max == n);
    CHECK(r.alpha_cs == 0);
    CHECK(r.e_r == static_cast<long long>(n) * (n - 1) / 2);
  }
}

TEST_CASE("caa with the full edge budget isolates everyone") {
  for (int n = 2; n <= 30; ++n) {
    const CaaResult r = caa(n, static_cast<long long>(n) * (n - 1) / 2);
    CHECK(r.e_r == 0);
    CHECK(r.n_max == 1);
    CHECK(r.alpha_cs == n - 1);
  }
}

TEST_CASE("caa rejects budgets beyond the complete graph") {
  CHECK_THROWS_AS(caa(4, 7), BudgetExceeded);
  CHECK_THROWS_AS(caa(4, -1), BudgetExceeded);
}

TEST_CASE("caa result invariants hold for every budget") {
  for (int n = 1; n <= 20; ++n) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    for (long long ac = 0; ac <= total; ++ac) {
      const CaaResult r = caa(n, ac);
      CHECK(r.n_max + r.alpha_cs == n);
      CHECK(r.n_max >= 1);
      CHECK(r.e_r <= r.ebar[r.n_max - 1]);
      if (r.n_max > 1) CHECK(r.e_r > r.ebar[r.n_max - 2]);  // minimality
    }
  }
}

TEST_CASE("caa is antitone: more attacks never shrink the approximation") {
  for (int n = 1; n <= 20; ++n) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    int previous = -1;
    for (long long ac = 0; ac <= total; ++ac) {
      const int cs = caa(n, ac).alpha_cs;
      CHECK(cs >= previous);
      previous = cs;
    }
  }
}

namespace {

// Constructive witness: an edge set of exactly alpha_c attacks whose removal
// from K_N leaves a largest component of exactly n_max robots. Build the even
// clique partition, cut all cross edges, then dismantle the other classes and
// finally thin the first class down to a spanning path if more cuts are due.
std::vector<Edge> witness_attack(int n_robots, long long alpha_c, int n_max) {
  std::vector<int> klass(n_robots);
  for (int v = 0; v < n_robots; ++v) klass[v] = v / n_max;

  std::vector<Edge> cross, in_first, in_others_tree, in_others_extra;
  for (int i = 0; i < n_robots; ++i) {
    for (int j = i + 1; j < n_robots; ++j) {
      if (klass[i] != klass[j]) {
        cross.emplace_back(i, j);
      } else if (klass[i] == 0) {
        if (j != i + 1) in_first.emplace_back(i, j);  // keep the path 0-1-..-(n_max-1)
      } else if (j == i + 1) {
        in_others_tree.emplace_back(i, j);
      } else {
        in_others_extra.emplace_back(i, j);
      }
    }
  }

  std::vector<Edge> attack = cross;  // mandatory: realize the partition
  auto take_from = [&attack, alpha_c](const std::vector<Edge>& pool) {
    for (const Edge& e : pool) {
      if (static_cast<long long>(attack.size()) >= alpha_c) return;
      attack.push_back(e);
    }
  };
  take_from(in_others_extra);  // chords of other classes first
  take_from(in_others_tree);   // then disconnect them entirely
  take_from(in_first);         // finally thin the protected class
  return attack;
}

}  // namespace

TEST_CASE("every budget admits an attack realizing exactly n_max") {
  for (int n = 1; n <= 10; ++n) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    for (long long ac = 0; ac <= total; ++ac) {
      const CaaResult r = caa(n, ac);
      const std::vector<Edge> attack = witness_attack(n, ac, r.n_max);
      REQUIRE(static_cast<long long>(attack.size()) == ac);

      std::size_t largest = 0;
      for (const auto& component : connected_components(n, attack)) {
        largest = std::max(largest, component.size());
      }
      CHECK(static_cast<int>(largest) == r.n_max);
    }
  }
}

TEST_CASE("caa runs in well under a millisecond") {
  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < 100; ++rep) {
    caa(5, 7);
    caa(4, 4);
    caa(10, 29);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(elapsed / 100.0 < 1e-3);
}
