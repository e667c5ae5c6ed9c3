#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "interval.hpp"

namespace windtree {

// Combinatorial datum of an interval exchange: the order of the letters
// before (top) and after (bot) the exchange. Letters are 0..n-1.
struct Perm {
  std::vector<int> top;
  std::vector<int> bot;

  int size() const { return static_cast<int>(top.size()); }
  bool operator==(const Perm&) const = default;

  // positions: pos[letter] = index in the row
  std::vector<int> top_pos() const;
  std::vector<int> bot_pos() const;

  bool is_valid() const;        // both rows are permutations of 0..n-1
  bool is_irreducible() const;  // no proper prefix exchanged within itself
};

// Interval exchange transformation on [0, total), right-continuous,
// continuity intervals [x_{i-1}, x_i) in top order. Lengths are carried as
// outward-rounded enclosures; the map itself is immutable after construction.
class Iet {
 public:
  Iet() = default;

  // Validating constructor per the library contract: positive lengths,
  // irreducible permutation, domain normalized to [0, 1).
  static Iet make(const Perm& p, const std::vector<double>& lengths);
  static Iet make(const Perm& p, const std::vector<Ival>& lengths, bool normalize);
  // Induced maps may be reducible (or even a single rigid piece), so they skip
  // the irreducibility gate but keep the size/positivity checks.
  static Iet make_induced(const Perm& p, const std::vector<Ival>& lengths);

  int size() const { return perm_.size(); }
  const Perm& perm() const { return perm_; }
  const std::vector<Ival>& lengths() const { return len_; }
  const Ival& length(int letter) const { return len_[letter]; }
  Ival total() const { return xt_.back(); }

  // Breakpoints x_0 <= ... <= x_n of the top (domain) and bottom (image) layouts.
  const std::vector<Ival>& top_breaks() const { return xt_; }
  const std::vector<Ival>& bot_breaks() const { return xb_; }
  // Left endpoint of I_letter in the domain / of T(I_letter) in the image.
  Ival top_left(int letter) const { return xt_[tpos_[letter]]; }
  Ival bot_left(int letter) const { return xb_[bpos_[letter]]; }
  // Translation T(x) = x + shift(letter) on I_letter.
  const Ival& shift(int letter) const { return shift_[letter]; }

  // Letter of the continuity interval containing x. Midpoint variant uses
  // enclosure midpoints; certified variant demands an unambiguous location.
  int letter_at(double x) const;
  int letter_at(const Ival& x) const;
  // right-continuous location for breakpoint orbits
  int letter_at_right(const Ival& x) const;
  int letter_at_inv(double x) const;
  int letter_at_inv(const Ival& x) const;

  double apply(double x) const;
  double apply_inv(double x) const;
  Ival apply(const Ival& x) const;
  Ival apply_inv(const Ival& x) const;
  Ival apply_right(const Ival& x) const;

  // S_n phi(x) by direct iteration; exact integer arithmetic for integer phi.
  int64_t birkhoff_sum(const std::vector<int64_t>& phi, const Ival& x, int64_t n) const;
  Ival birkhoff_sum(const std::vector<Ival>& phi, const Ival& x, int64_t n) const;

  std::string to_text() const;
  static Iet from_text(const std::string& text);

 private:
  Perm perm_;
  std::vector<Ival> len_;
  std::vector<int> tpos_, bpos_;
  std::vector<Ival> xt_, xb_;
  std::vector<Ival> shift_;

  void build();
};

// Induced (first-return) map of T on [0, ell), computed by brute-force
// piece splitting. The oracle against which renormalization is tested.
struct FirstReturn {
  Iet induced;                        // domain [0, ell), not renormalized
  std::vector<int64_t> return_times;  // per letter of `induced`
};

FirstReturn first_return(const Iet& T, const Ival& ell, int64_t step_budget);

// Keane check to finite depth: orbits of discontinuities avoid discontinuities.
// Returns false only on a certified early collision; ambiguous near-collisions fail().
bool verify_keane(const Iet& T, int64_t depth);

std::vector<double> midpoints(const std::vector<Ival>& v);

}  // namespace windtree
