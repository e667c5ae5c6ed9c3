#include "doctest.h"
#include "homology.hpp"

#include <random>

using namespace windtree;

namespace {
HomologyClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(-5, 5);
  std::vector<int64_t> raw(kNumGens);
  for (auto& x : raw) x = d(rng);
  return canonical_class(raw);
}

HomologyClass add(const HomologyClass& a, const HomologyClass& b) {
  HomologyClass r;
  for (int i = 0; i < kCanonicalRank; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}
}  // namespace

TEST_CASE("both defining relations canonicalize to zero") {
  // ch0 - ch1 - h00 - h10 + h01 + h11 = 0
  std::vector<int64_t> r1(kNumGens, 0);
  r1[CH0] = 1; r1[CH1] = -1; r1[H00] = -1; r1[H10] = -1; r1[H01] = 1; r1[H11] = 1;
  CHECK(canonical_class(r1).is_zero());
  // cv0 - cv1 - v00 + v10 - v01 + v11 = 0
  std::vector<int64_t> r2(kNumGens, 0);
  r2[CV0] = 1; r2[CV1] = -1; r2[V00] = -1; r2[V10] = 1; r2[V01] = -1; r2[V11] = 1;
  CHECK(canonical_class(r2).is_zero());
}

TEST_CASE("canonicalization is idempotent and fixes canonical generators") {
  const HomologyClass h = generator_class(H00);
  CHECK(canonical_class(h.to_raw()) == h);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const HomologyClass c = random_class(rng);
    CHECK(canonical_class(c.to_raw()) == c);
  }
}

TEST_CASE("gamma classes match their definitions") {
  const HomologyClass gh = gamma_h();
  CHECK(gh.c[4] == Rat(-1));
  CHECK(gh.c[5] == Rat(1));
  CHECK(gh.c[6] == Rat(-1));
  CHECK(gh.c[7] == Rat(1));
  for (int i : {0, 1, 2, 3, 8, 9}) CHECK(gh.c[i].is_zero());
  CHECK(!gh.is_zero());

  const HomologyClass gv = gamma_v();
  CHECK(gv == canonical_class(std::vector<int64_t>{1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(!gv.is_zero());

  // ch0 - ch1 reduces to gamma_v by the first relation
  std::vector<int64_t> diff(kNumGens, 0);
  diff[CH0] = 1;
  diff[CH1] = -1;
  CHECK(canonical_class(diff) == gv);
}

TEST_CASE("Klein action on generators") {
  CHECK(klein_act(KleinGen::TauH, generator_class(H00)) == generator_class(H10));
  CHECK(klein_act(KleinGen::TauH, generator_class(CH0)) == generator_class(CH0));
  CHECK(klein_act(KleinGen::TauV, generator_class(V10)) == generator_class(V11));
  CHECK(klein_act(KleinGen::TauV, generator_class(CV0)) == generator_class(CV0));
  // tau_h cv0 = cv1, expressed canonically
  std::vector<int64_t> cv1(kNumGens, 0);
  cv1[CV1] = 1;
  CHECK(klein_act(KleinGen::TauH, generator_class(CV0)) == canonical_class(cv1));
}

TEST_CASE("Klein generators are commuting involutions") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const HomologyClass c = random_class(rng);
    CHECK(klein_act(KleinGen::TauH, klein_act(KleinGen::TauH, c)) == c);
    CHECK(klein_act(KleinGen::TauV, klein_act(KleinGen::TauV, c)) == c);
    CHECK(klein_act(KleinGen::TauH, klein_act(KleinGen::TauV, c)) ==
          klein_act(KleinGen::TauV, klein_act(KleinGen::TauH, c)));
  }
}

TEST_CASE("block decomposition resolves the identity and localizes gamma_h") {
  const BlockDecomposition bd = block_decompose(gamma_h());
  CHECK(bd.pp.is_zero());
  CHECK(bd.pm.is_zero());
  CHECK(bd.mm.is_zero());
  CHECK(bd.mp == gamma_h());

  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const HomologyClass c = random_class(rng);
    const BlockDecomposition d = block_decompose(c);
    CHECK(add(add(d.pp, d.pm), add(d.mp, d.mm)) == c);
    // signs: tau_h fixes the E^{+-} component
    CHECK(klein_act(KleinGen::TauH, d.pm) == d.pm);
    CHECK(klein_act(KleinGen::TauV, d.mp) == d.mp);
    // and negates the E^{-+} one
    HomologyClass neg;
    for (int k = 0; k < kCanonicalRank; ++k) neg.c[k] = -d.mp.c[k];
    CHECK(klein_act(KleinGen::TauH, d.mp) == neg);
  }
}

TEST_CASE("named block generators live in their blocks") {
  auto in_block = [](const HomologyClass& c, int which) {
    const BlockDecomposition d = block_decompose(c);
    const HomologyClass* parts[4] = {&d.pp, &d.pm, &d.mp, &d.mm};
    for (int i = 0; i < 4; ++i) {
      if (i == which) {
        if (!(*parts[i] == c)) return false;
      } else if (!parts[i]->is_zero()) {
        return false;
      }
    }
    return true;
  };
  CHECK(in_block(gamma_v(), 1));
  CHECK(in_block(block_pm_second(), 1));
  CHECK(in_block(block_mp_first(), 2));
  CHECK(in_block(gamma_h(), 2));
  // E^{++} and E^{--} generators
  CHECK(in_block(canonical_class(std::vector<int64_t>{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 0));
  CHECK(in_block(canonical_class(std::vector<int64_t>{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0}), 0));
  CHECK(in_block(canonical_class(std::vector<int64_t>{1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 3));
  CHECK(in_block(canonical_class(std::vector<int64_t>{0, 0, 0, 0, 1, -1, -1, 1, 0, 0, 0, 0}), 3));
}
