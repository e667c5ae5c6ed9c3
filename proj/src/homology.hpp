#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "interval.hpp"

namespace windtree {

// Exact rational with 64-bit parts; the homology computations only ever meet
// small denominators (the Klein projectors divide by 4).
struct Rat {
  int64_t num = 0;
  int64_t den = 1;

  Rat() = default;
  Rat(int64_t n) : num(n) {}
  Rat(int64_t n, int64_t d);

  bool operator==(const Rat&) const = default;
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);
inline Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }

// Generators of H_1(X,Z) in the fixed order used throughout:
//   h00 h10 h01 h11 | v00 v10 v01 v11 | ch0 ch1 | cv0 cv1
enum Gen : int {
  H00 = 0, H10, H01, H11,
  V00, V10, V01, V11,
  CH0, CH1, CV0, CV1,
  kNumGens = 12
};

// The two relations eliminate ch1 and cv1; canonical coordinates are the ten
//   h00 h10 h01 h11 v00 v10 v01 v11 ch0 cv0.
inline constexpr int kCanonicalRank = 10;

struct HomologyClass {
  std::array<Rat, kCanonicalRank> c{};

  bool operator==(const HomologyClass&) const = default;
  bool is_zero() const;
  bool is_integer() const;
  // expansion back to the 12 generators (ch1, cv1 coefficients zero)
  std::array<Rat, kNumGens> to_raw() const;
  std::string to_string() const;
};

HomologyClass canonical_class(const std::array<Rat, kNumGens>& raw);
HomologyClass canonical_class(const std::vector<int64_t>& raw12);
HomologyClass generator_class(Gen g);

// gamma_h = -v00 + v10 - v01 + v11, gamma_v = h00 + h10 - h01 - h11 (the
// classes defining the Z^2 wind-tree cover).
HomologyClass gamma_h();
HomologyClass gamma_v();

enum class KleinGen { TauH, TauV };

HomologyClass klein_act(KleinGen s, const HomologyClass& c);

// Klein-group eigenspace components (E++, E+-, E-+, E--) via the projectors
// (1/4)(1 +- tau_h)(1 +- tau_v); they sum back to the input.
struct BlockDecomposition {
  HomologyClass pp, pm, mp, mm;
};
BlockDecomposition block_decompose(const HomologyClass& c);

// Standard generators of the 2-dimensional blocks:
//   E^{+-} = < gamma_v, v00+v10-v01-v11 >,
//   E^{-+} = < h00-h10+h01-h11, gamma_h >.
HomologyClass block_pm_second();
HomologyClass block_mp_first();

}  // namespace windtree
