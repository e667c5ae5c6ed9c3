#include "doctest.h"
#include "iet.hpp"

#include <cmath>
#include <random>

using namespace windtree;

namespace {
const Perm kSwap{{0, 1}, {1, 0}};
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

Iet rotation_half() { return Iet::make(kSwap, std::vector<double>{0.5, 0.5}); }
Iet golden() { return Iet::make(kSwap, std::vector<double>{kPhi - 1.0, 2.0 - kPhi}); }
}  // namespace

TEST_CASE("make_iet validates and normalizes") {
  Iet T = rotation_half();
  CHECK(T.size() == 2);
  CHECK(T.total().contains(1.0));

  CHECK_THROWS_AS(Iet::make(Perm{{0, 1}, {0, 1}}, std::vector<double>{0.5, 0.5}), Error);
  CHECK_THROWS_AS(Iet::make(kSwap, std::vector<double>{0.5, 0.0}), Error);
  CHECK_THROWS_AS(Iet::make(kSwap, std::vector<double>{0.5}), Error);
  try {
    Iet::make(Perm{{0, 1}, {0, 1}}, std::vector<double>{0.5, 0.5});
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::ReduciblePermutation);
  }
}

TEST_CASE("rotation by 1/2 evaluates as expected") {
  Iet T = rotation_half();
  CHECK(T.apply(0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(T.apply(0.75) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(T.apply(1.5), Error);
}

TEST_CASE("golden 2-IET agrees with the circle rotation") {
  Iet T = golden();
  const double alpha = 2.0 - kPhi;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const double expect = std::fmod(x + alpha, 1.0);
    CHECK(std::fabs(T.apply(x) - expect) < 1e-12);
  }
}

TEST_CASE("inverse consistency on enclosures") {
  Iet T = golden();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const Ival back = T.apply_inv(T.apply(Ival(x)));
    CHECK(back.contains(x));
    CHECK(back.width() < 1e-14);
  }
}

TEST_CASE("measure preservation and bijectivity") {
  Iet T = Iet::make(Perm{{0, 1, 2, 3}, {3, 2, 1, 0}},
                    std::vector<double>{0.3, 0.1, 0.4, 0.2});
  // images tile [0,1): sorted image left endpoints + lengths chain up
  std::vector<std::pair<double, int>> img;
  for (int a = 0; a < 4; ++a) img.push_back({T.bot_left(a).mid(), a});
  std::sort(img.begin(), img.end());
  Ival cur(0.0);
  for (auto& [left, a] : img) {
    CHECK(Ival(left).intersects(cur));
    cur += T.length(a);
  }
  CHECK(cur.contains(1.0));
}

TEST_CASE("birkhoff sums: base cases, exact integers, additivity") {
  Iet T = golden();
  std::vector<int64_t> phi{1, -1};
  CHECK(T.birkhoff_sum(phi, Ival(0.2), 0) == 0);
  CHECK(T.birkhoff_sum(phi, Ival(0.2), 1) == 1);
  CHECK(T.birkhoff_sum(phi, Ival(0.7), 1) == -1);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int64_t> mn(0, 50);
  for (int it = 0; it < 200; ++it) {
    const Ival x(u(rng));
    const int64_t m = mn(rng), n = mn(rng);
    Ival xm = x;
    for (int64_t i = 0; i < m; ++i) xm = T.apply(xm);
    const int64_t lhs = T.birkhoff_sum(phi, x, m + n);
    const int64_t rhs = T.birkhoff_sum(phi, x, m) + T.birkhoff_sum(phi, xm, n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("first_return: full domain returns T itself") {
  Iet T = golden();
  FirstReturn fr = first_return(T, Ival(1.0), 10000);
  CHECK(fr.induced.size() == 2);
  CHECK(fr.return_times == std::vector<int64_t>{1, 1});
  CHECK(fr.induced.perm().bot == std::vector<int>{1, 0});
  CHECK(fr.induced.length(0).intersects(T.length(0)));
}

TEST_CASE("first_return: rotation by 1/2 on half interval is the identity") {
  Iet T = rotation_half();
  FirstReturn fr = first_return(T, Ival(0.5), 10000);
  CHECK(fr.induced.size() == 1);
  CHECK(fr.return_times == std::vector<int64_t>{2});
}

TEST_CASE("first_return: tower identity sums to the whole interval") {
  Iet T = Iet::make(Perm{{0, 1, 2, 3}, {3, 2, 1, 0}},
                    std::vector<double>{0.31, 0.17, 0.29, 0.23});
  FirstReturn fr = first_return(T, Ival(0.4), 100000);
  Ival total(0.0);
  for (int j = 0; j < fr.induced.size(); ++j)
    total += fr.induced.length(j) * Ival(static_cast<double>(fr.return_times[j]));
  CHECK(total.contains(1.0));
}

TEST_CASE("text round trip is bit exact") {
  Iet T = golden();
  const std::string s = T.to_text();
  Iet U = Iet::from_text(s);
  CHECK(U.to_text() == s);
  for (int a = 0; a < 2; ++a) {
    CHECK(U.length(a).lo == T.length(a).lo);
    CHECK(U.length(a).hi == T.length(a).hi);
  }
}

TEST_CASE("keane verification passes on the golden IET") {
  CHECK(verify_keane(golden(), 2000));
}
