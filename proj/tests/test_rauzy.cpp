#include "doctest.h"
#include "rauzy.hpp"

#include <cmath>
#include <random>

using namespace windtree;

namespace {
const Perm kSwap{{0, 1}, {1, 0}};

RauzyLoop golden_loop() { return make_loop(kSwap, "bt"); }
}  // namespace

TEST_CASE("rv_step cuts the longer rightmost interval") {
  Iet T = Iet::make(kSwap, std::vector<double>{0.7, 0.3});
  RvStep s = rv_step(T);
  CHECK(s.kind == MoveKind::Bottom);  // bottom-last letter 0 is longer
  CHECK(s.winner == 0);
  CHECK(s.loser == 1);
  CHECK(s.next.length(0).contains(0.4));
  CHECK(s.next.length(1).contains(0.3));
  // lengths transform by lambda = E lambda'
  const auto lp = s.next.lengths();
  const auto back = elementary_matrix(T.perm(), s.kind).apply(lp);
  CHECK(back[0].contains(0.7));
  CHECK(back[1].contains(0.3));
}

TEST_CASE("rv_step rejects ties") {
  Iet T = Iet::make(kSwap, std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(rv_step(T), Error);
}

TEST_CASE("cocycle property over two steps") {
  Iet T = Iet::make(kSwap, std::vector<double>{0.7, 0.3});
  RvStep s1 = rv_step(T);
  RvStep s2 = rv_step(s1.next);
  IntMat E1 = elementary_matrix(T.perm(), s1.kind);
  IntMat E2 = elementary_matrix(s1.next.perm(), s2.kind);
  IntMat A02 = E1.mul(E2);
  const auto l2 = s2.next.lengths();
  const auto l0 = A02.apply(l2);
  CHECK(l0[0].contains(0.7));
  CHECK(l0[1].contains(0.3));
}

TEST_CASE("loop search on two letters") {
  CHECK(rauzy_loop_search(kSwap, 0).empty());
  auto loops = rauzy_loop_search(kSwap, 2);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].word == "bt");
  CHECK(loops[0].matrix.at(0, 0) == 2);
  CHECK(loops[0].matrix.at(0, 1) == 1);
  CHECK(loops[0].matrix.at(1, 0) == 1);
  CHECK(loops[0].matrix.at(1, 1) == 1);
  // parallel search gives the same catalog
  auto loops2 = rauzy_loop_search(kSwap, 2, 2);
  REQUIRE(loops2.size() == 1);
  CHECK(loops2[0].word == loops[0].word);
}

TEST_CASE("loop matrices are unimodular and nonnegative") {
  for (const auto& L : rauzy_loop_search(kSwap, 6)) {
    CHECK(L.matrix.is_nonneg());
    CHECK(std::abs(L.matrix.det()) == 1);
  }
}

TEST_CASE("fixed_point_lengths on the golden matrix") {
  IntMat A(2);
  A.at(0, 0) = 2; A.at(0, 1) = 1; A.at(1, 0) = 1; A.at(1, 1) = 1;
  PerronData pd = fixed_point_lengths(A);
  const double rho = (3.0 + std::sqrt(5.0)) / 2.0;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(pd.rho.contains(rho));
  CHECK(pd.rho.width() < 1e-10);
  CHECK(pd.lengths[0].contains(phi / (1.0 + phi)));
  CHECK(pd.lengths[1].contains(1.0 / (1.0 + phi)));
  CHECK(pd.resid < 1e-12);
}

TEST_CASE("fixed_point_lengths rejects imprimitive input") {
  CHECK_THROWS_AS(fixed_point_lengths(IntMat::identity(3)), Error);
}

TEST_CASE("random primitive 4x4 matrices have small Perron residuals") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(0, 4);
  int tested = 0;
  while (tested < 20) {
    IntMat A(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A.at(i, j) = entry(rng);
    if (!is_primitive(A)) continue;
    PerronData pd = fixed_point_lengths(A);
    CHECK(pd.resid < 1e-12);
    // certified enclosure contains a better Rayleigh estimate
    CHECK(pd.rho.width() < 1e-8 * std::max(1.0, pd.rho.mid()));
    ++tested;
  }
}

TEST_CASE("periodic IET replays its loop") {
  PeriodicIet P = make_periodic(golden_loop());
  CHECK(P.iet.length(0).contains((std::sqrt(5.0) - 1.0) / 2.0));
  CHECK(replay_deviation(P) < 1e-12);
}

TEST_CASE("towers of the golden periodic IET") {
  PeriodicIet P = make_periodic(golden_loop());
  TowerSystem ts = towers(P, 1);
  CHECK(ts.heights == std::vector<int64_t>{3, 2});
  // Lebesgue identity
  Ival total(0.0);
  for (int j = 0; j < 2; ++j)
    total += Ival(static_cast<double>(ts.heights[j])) * ts.base_lengths[j];
  CHECK(total.contains(1.0));
  // floors tile: sorted left endpoints + sizes chain
  Ival cur(0.0);
  for (const auto& f : ts.floors) {
    CHECK(f.left.intersects(cur));
    cur += ts.base_lengths[f.j];
  }
  CHECK(cur.contains(1.0));

  TowerSystem t2 = towers(P, 2);
  CHECK(t2.Ak == P.A().pow(2));
  CHECK(t2.heights == std::vector<int64_t>{8, 5});
}

TEST_CASE("cocycle oracle: Birkhoff sums at tower return times") {
  PeriodicIet P = make_periodic(golden_loop());
  const std::vector<int64_t> phi{1, -1};
  for (int k = 1; k <= 4; ++k) {
    TowerSystem ts = towers(P, k);
    const auto phik = ts.Ak.apply_transpose(phi);
    for (int j = 0; j < 2; ++j) {
      // base point: midpoint of J_j^(k)
      const Ival base_left = P.iet.top_left(j) * ts.scale;
      const Ival x = base_left + ts.base_lengths[j] * 0.5;
      CHECK(P.iet.birkhoff_sum(phi, x, ts.heights[j]) == phik[j]);
    }
  }
}

TEST_CASE("first_return matches one Rauzy step on the golden IET") {
  PeriodicIet P = make_periodic(golden_loop());
  RvStep s = rv_step(P.iet);
  const Ival ell = s.next.total();
  FirstReturn fr = first_return(P.iet, ell, 100000);
  REQUIRE(fr.induced.size() == 2);
  for (int a = 0; a < 2; ++a) CHECK(fr.induced.length(a).intersects(s.next.length(a)));
  CHECK(fr.induced.perm().top == s.next.perm().top);
  CHECK(fr.induced.perm().bot == s.next.perm().bot);
}

TEST_CASE("loop serialization round trip") {
  RauzyLoop L = golden_loop();
  RauzyLoop M = RauzyLoop::from_text(L.to_text());
  CHECK(M.word == L.word);
  CHECK(M.matrix == L.matrix);
  CHECK(M.base == L.base);
}
