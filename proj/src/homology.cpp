#include "homology.hpp"

#include <numeric>
#include <sstream>

namespace windtree {

namespace {
int64_t gcd64(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rat::Rat(int64_t n, int64_t d) : num(n), den(d) {
  if (den == 0) fail(ErrorCode::InvalidParams, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = gcd64(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) fail(ErrorCode::InvalidParams, "rational division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}

bool HomologyClass::is_zero() const {
  for (const Rat& x : c)
    if (!x.is_zero()) return false;
  return true;
}

bool HomologyClass::is_integer() const {
  for (const Rat& x : c)
    if (!x.is_integer()) return false;
  return true;
}

std::array<Rat, kNumGens> HomologyClass::to_raw() const {
  std::array<Rat, kNumGens> raw{};
  for (int i = 0; i < 8; ++i) raw[i] = c[i];
  raw[CH0] = c[8];
  raw[CV0] = c[9];
  return raw;
}

std::string HomologyClass::to_string() const {
  static const char* names[kCanonicalRank] = {"h00", "h10", "h01", "h11", "v00",
                                              "v10", "v01", "v11", "ch0", "cv0"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kCanonicalRank; ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c[i].num;
    if (c[i].den != 1) os << "/" << c[i].den;
    os << "*" << names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HomologyClass canonical_class(const std::array<Rat, kNumGens>& raw) {
  // Relations of H_1(X,Z):
  //   ch0 - ch1 = h00 + h10 - h01 - h11   =>  ch1 = ch0 - h00 - h10 + h01 + h11
  //   cv0 - cv1 = v00 - v10 + v01 - v11   =>  cv1 = cv0 - v00 + v10 - v01 + v11
  HomologyClass out;
  for (int i = 0; i < 8; ++i) out.c[i] = raw[i];
  out.c[8] = raw[CH0];
  out.c[9] = raw[CV0];
  const Rat x = raw[CH1];
  out.c[8] = out.c[8] + x;
  out.c[0] = out.c[0] - x;  // h00
  out.c[1] = out.c[1] - x;  // h10
  out.c[2] = out.c[2] + x;  // h01
  out.c[3] = out.c[3] + x;  // h11
  const Rat y = raw[CV1];
  out.c[9] = out.c[9] + y;
  out.c[4] = out.c[4] - y;  // v00
  out.c[5] = out.c[5] + y;  // v10
  out.c[6] = out.c[6] - y;  // v01
  out.c[7] = out.c[7] + y;  // v11
  return out;
}

HomologyClass canonical_class(const std::vector<int64_t>& raw12) {
  if (raw12.size() != kNumGens) fail(ErrorCode::SizeMismatch, "expected 12 generator coefficients");
  std::array<Rat, kNumGens> raw{};
  for (int i = 0; i < kNumGens; ++i) raw[i] = Rat(raw12[i]);
  return canonical_class(raw);
}

HomologyClass generator_class(Gen g) {
  std::array<Rat, kNumGens> raw{};
  raw[g] = Rat(1);
  return canonical_class(raw);
}

HomologyClass gamma_h() {
  std::vector<int64_t> raw(kNumGens, 0);
  raw[V00] = -1;
  raw[V10] = 1;
  raw[V01] = -1;
  raw[V11] = 1;
  return canonical_class(raw);
}

HomologyClass gamma_v() {
  std::vector<int64_t> raw(kNumGens, 0);
  raw[H00] = 1;
  raw[H10] = 1;
  raw[H01] = -1;
  raw[H11] = -1;
  return canonical_class(raw);
}

HomologyClass klein_act(KleinGen s, const HomologyClass& cls) {
  // Generator action: tau_h swaps the x-index of h,v and of cv; tau_v swaps
  // the y-index of h,v and of ch.
  static const int tau_h_perm[kNumGens] = {H10, H00, H11, H01, V10, V00, V11, V01, CH0, CH1, CV1, CV0};
  static const int tau_v_perm[kNumGens] = {H01, H11, H00, H10, V01, V11, V00, V10, CH1, CH0, CV0, CV1};
  const int* perm = (s == KleinGen::TauH) ? tau_h_perm : tau_v_perm;
  const std::array<Rat, kNumGens> raw = cls.to_raw();
  std::array<Rat, kNumGens> moved{};
  for (int g = 0; g < kNumGens; ++g) moved[perm[g]] = moved[perm[g]] + raw[g];
  return canonical_class(moved);
}

BlockDecomposition block_decompose(const HomologyClass& c) {
  const HomologyClass th = klein_act(KleinGen::TauH, c);
  const HomologyClass tv = klein_act(KleinGen::TauV, c);
  const HomologyClass thv = klein_act(KleinGen::TauV, th);
  const Rat q(1, 4);
  BlockDecomposition out;
  for (int i = 0; i < kCanonicalRank; ++i) {
    out.pp.c[i] = q * (c.c[i] + th.c[i] + tv.c[i] + thv.c[i]);
    out.pm.c[i] = q * (c.c[i] + th.c[i] - tv.c[i] - thv.c[i]);
    out.mp.c[i] = q * (c.c[i] - th.c[i] + tv.c[i] - thv.c[i]);
    out.mm.c[i] = q * (c.c[i] - th.c[i] - tv.c[i] + thv.c[i]);
  }
  return out;
}

HomologyClass block_pm_second() {
  std::vector<int64_t> raw(kNumGens, 0);
  raw[V00] = 1;
  raw[V10] = 1;
  raw[V01] = -1;
  raw[V11] = -1;
  return canonical_class(raw);
}

HomologyClass block_mp_first() {
  std::vector<int64_t> raw(kNumGens, 0);
  raw[H00] = 1;
  raw[H10] = -1;
  raw[H01] = 1;
  raw[H11] = -1;
  return canonical_class(raw);
}

}  // namespace windtree
