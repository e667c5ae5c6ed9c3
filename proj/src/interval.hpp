#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace windtree {

enum class ErrorCode {
  NonPositiveLength,
  ReduciblePermutation,
  SizeMismatch,
  OutOfDomain,
  BudgetExceeded,
  DegenerateSubinterval,
  TieAmbiguous,
  AmbiguousComparison,
  NotPrimitive,
  ComplexStableSpace,
  NearUnitEigenvalue,
  UnderdeterminedTau,
  NotInSpan,
  SingularC,
  SingularHit,
  CornerHit,
  StartInsideObstacle,
  GapUndetermined,
  InvalidParams,
  InsufficientDepths,
  Overflow,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
  ErrorCode code;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& what) { throw Error(c, what); }

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Closed interval [lo, hi], endpoints nudged outward after every operation.
// All derived reals in the pipeline are carried as these enclosures; where a
// comparison of overlapping enclosures would be needed, callers raise an
// ambiguity error instead of guessing.
struct Ival {
  double lo = 0.0;
  double hi = 0.0;

  Ival() = default;
  explicit Ival(double x) : lo(x), hi(x) {}
  Ival(double l, double h) : lo(l), hi(h) {}

  static Ival exact(double x) { return Ival(x); }
  static Ival with_rad(double mid, double rad) {
    return Ival(next_down(mid - rad), next_up(mid + rad));
  }
  static Ival hull(const Ival& a, const Ival& b) {
    return Ival(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
  }

  double mid() const { return 0.5 * (lo + hi); }
  double rad() const { return 0.5 * (hi - lo); }
  double width() const { return hi - lo; }
  bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }
  bool is_point() const { return lo == hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Ival& o) const { return lo <= o.lo && o.hi <= hi; }
  bool interior_contains(const Ival& o) const { return lo < o.lo && o.hi < hi; }
  bool intersects(const Ival& o) const { return lo <= o.hi && o.lo <= hi; }
  bool disjoint(const Ival& o) const { return !intersects(o); }

  Ival operator-() const { return Ival(-hi, -lo); }
};

inline Ival operator+(const Ival& a, const Ival& b) {
  return Ival(next_down(a.lo + b.lo), next_up(a.hi + b.hi));
}
inline Ival operator-(const Ival& a, const Ival& b) {
  return Ival(next_down(a.lo - b.hi), next_up(a.hi - b.lo));
}
inline Ival operator*(const Ival& a, const Ival& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Ival(next_down(std::min(std::min(p1, p2), std::min(p3, p4))),
              next_up(std::max(std::max(p1, p2), std::max(p3, p4))));
}
inline Ival operator/(const Ival& a, const Ival& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) fail(ErrorCode::Internal, "interval division by zero-straddling divisor");
  const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  return Ival(next_down(std::min(std::min(p1, p2), std::min(p3, p4))),
              next_up(std::max(std::max(p1, p2), std::max(p3, p4))));
}
inline Ival operator+(const Ival& a, double b) { return a + Ival(b); }
inline Ival operator-(const Ival& a, double b) { return a - Ival(b); }
inline Ival operator*(const Ival& a, double b) { return a * Ival(b); }
inline Ival operator/(const Ival& a, double b) { return a / Ival(b); }
inline Ival operator+(double a, const Ival& b) { return Ival(a) + b; }
inline Ival operator-(double a, const Ival& b) { return Ival(a) - b; }
inline Ival operator*(double a, const Ival& b) { return Ival(a) * b; }
inline Ival operator/(double a, const Ival& b) { return Ival(a) / b; }

inline Ival& operator+=(Ival& a, const Ival& b) { return a = a + b; }
inline Ival& operator-=(Ival& a, const Ival& b) { return a = a - b; }
inline Ival& operator*=(Ival& a, const Ival& b) { return a = a * b; }

inline Ival abs(const Ival& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return -a;
  return Ival(0.0, std::max(-a.lo, a.hi));
}

inline Ival sqrt(const Ival& a) {
  if (a.lo < 0.0) fail(ErrorCode::Internal, "interval sqrt of negative");
  return Ival(next_down(std::sqrt(a.lo)), next_up(std::sqrt(a.hi)));
}

// glibc exp/log are a hair beyond correctly rounded; 4 ulps of slack covers it.
inline double slack_up(double x) { return next_up(next_up(next_up(next_up(x)))); }
inline double slack_down(double x) { return next_down(next_down(next_down(next_down(x)))); }

inline Ival exp(const Ival& a) { return Ival(slack_down(std::exp(a.lo)), slack_up(std::exp(a.hi))); }
inline Ival log(const Ival& a) {
  if (a.lo <= 0.0) fail(ErrorCode::Internal, "interval log of non-positive");
  return Ival(slack_down(std::log(a.lo)), slack_up(std::log(a.hi)));
}

inline Ival pow_int(const Ival& a, int64_t k) {
  if (k < 0) return Ival(1.0) / pow_int(a, -k);
  Ival r(1.0);
  Ival base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

// a^x for a > 0 via exp(x log a).
inline Ival pow_real(const Ival& a, const Ival& x) { return exp(x * log(a)); }

enum class Order { Less, Greater, Ambiguous };

inline Order compare(const Ival& a, const Ival& b) {
  if (a.hi < b.lo) return Order::Less;
  if (b.hi < a.lo) return Order::Greater;
  return Order::Ambiguous;
}

inline bool certainly_less(const Ival& a, const Ival& b) { return a.hi < b.lo; }
inline bool certainly_greater(const Ival& a, const Ival& b) { return a.lo > b.hi; }
inline bool certainly_positive(const Ival& a) { return a.lo > 0.0; }
inline bool certainly_negative(const Ival& a) { return a.hi < 0.0; }

inline Ival intersect(const Ival& a, const Ival& b) {
  return Ival(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

}  // namespace windtree
