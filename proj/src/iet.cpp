#include "iet.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <numeric>
#include <sstream>

namespace windtree {

std::vector<int> Perm::top_pos() const {
  std::vector<int> p(top.size());
  for (int i = 0; i < size(); ++i) p[top[i]] = i;
  return p;
}

std::vector<int> Perm::bot_pos() const {
  std::vector<int> p(bot.size());
  for (int i = 0; i < size(); ++i) p[bot[i]] = i;
  return p;
}

bool Perm::is_valid() const {
  const int n = size();
  if (n < 1 || static_cast<int>(bot.size()) != n) return false;
  std::vector<char> seen_t(n, 0), seen_b(n, 0);
  for (int i = 0; i < n; ++i) {
    if (top[i] < 0 || top[i] >= n || seen_t[top[i]]) return false;
    if (bot[i] < 0 || bot[i] >= n || seen_b[bot[i]]) return false;
    seen_t[top[i]] = seen_b[bot[i]] = 1;
  }
  return true;
}

bool Perm::is_irreducible() const {
  const int n = size();
  std::vector<char> in_top(n, 0), in_bot(n, 0);
  for (int k = 0; k < n - 1; ++k) {
    in_top[top[k]] = 1;
    in_bot[bot[k]] = 1;
    bool equal = true;
    for (int a = 0; a < n && equal; ++a) equal = (in_top[a] == in_bot[a]);
    if (equal) return false;
  }
  return true;
}

void Iet::build() {
  const int n = perm_.size();
  tpos_ = perm_.top_pos();
  bpos_ = perm_.bot_pos();
  xt_.assign(n + 1, Ival(0.0));
  xb_.assign(n + 1, Ival(0.0));
  for (int i = 0; i < n; ++i) xt_[i + 1] = xt_[i] + len_[perm_.top[i]];
  for (int i = 0; i < n; ++i) xb_[i + 1] = xb_[i] + len_[perm_.bot[i]];
  shift_.assign(n, Ival(0.0));
  for (int a = 0; a < n; ++a) shift_[a] = xb_[bpos_[a]] - xt_[tpos_[a]];
}

Iet Iet::make(const Perm& p, const std::vector<double>& lengths) {
  std::vector<Ival> l;
  l.reserve(lengths.size());
  for (double x : lengths) l.push_back(Ival(x));
  return make(p, l, true);
}

Iet Iet::make(const Perm& p, const std::vector<Ival>& lengths, bool normalize) {
  if (!p.is_irreducible()) fail(ErrorCode::ReduciblePermutation, "reducible permutation pair");
  Iet T = make_induced(p, lengths);
  if (normalize) {
    Ival total(0.0);
    for (const Ival& l : lengths) total += l;
    for (Ival& l : T.len_) l = l / total;
    T.build();
  }
  return T;
}

Iet Iet::make_induced(const Perm& p, const std::vector<Ival>& lengths) {
  if (p.size() < 1 || !p.is_valid())
    fail(ErrorCode::SizeMismatch, "permutation pair is not a pair of bijections");
  if (static_cast<int>(lengths.size()) != p.size())
    fail(ErrorCode::SizeMismatch, "length vector size does not match alphabet");
  for (const Ival& l : lengths)
    if (!(l.lo > 0.0)) fail(ErrorCode::NonPositiveLength, "interval lengths must be certainly positive");
  Iet T;
  T.perm_ = p;
  T.len_ = lengths;
  T.build();
  return T;
}

namespace {
// Index i with breaks[i] <= x < breaks[i+1], located by enclosure midpoints.
int locate(const std::vector<Ival>& breaks, double x) {
  const int n = static_cast<int>(breaks.size()) - 1;
  if (!(x >= breaks.front().mid() && x < breaks.back().mid()))
    fail(ErrorCode::OutOfDomain, "point outside IET domain");
  int lo = 0, hi = n;
  while (hi - lo > 1) {
    const int m = (lo + hi) / 2;
    if (x >= breaks[m].mid()) lo = m; else hi = m;
  }
  return lo;
}

int locate_certified(const std::vector<Ival>& breaks, const Ival& x) {
  const int i = locate(breaks, x.mid());
  if (!certainly_less(x, breaks[i + 1]) || (i > 0 && !certainly_greater(x, breaks[i])) ||
      (i == 0 && compare(x, breaks[0]) == Order::Less))
    fail(ErrorCode::AmbiguousComparison, "point enclosure straddles an interval boundary");
  return i;
}
}  // namespace

int Iet::letter_at(double x) const { return perm_.top[locate(xt_, x)]; }
int Iet::letter_at(const Ival& x) const { return perm_.top[locate_certified(xt_, x)]; }

int Iet::letter_at_right(const Ival& x) const {
  // Right-continuous convention: a point whose enclosure overlaps a breakpoint
  // is assigned to the interval starting there, provided the overlap is of
  // enclosure-width size (an exact-coincidence candidate, not a wide miss).
  int i = locate(xt_, std::min(std::max(x.mid(), 0.0), next_down(xt_.back().mid())));
  if (!certainly_less(x, xt_[i + 1])) {
    const double slack = 8.0 * (x.width() + xt_[i + 1].width()) + 1e-300;
    if (std::fabs(x.mid() - xt_[i + 1].mid()) <= slack && i + 1 < size())
      ++i;
    else
      fail(ErrorCode::AmbiguousComparison, "breakpoint-orbit point cannot be located");
  }
  return perm_.top[i];
}

Ival Iet::apply_right(const Ival& x) const { return x + shift_[letter_at_right(x)]; }
int Iet::letter_at_inv(double x) const { return perm_.bot[locate(xb_, x)]; }
int Iet::letter_at_inv(const Ival& x) const { return perm_.bot[locate_certified(xb_, x)]; }

double Iet::apply(double x) const { return x + shift_[letter_at(x)].mid(); }
double Iet::apply_inv(double x) const { return x - shift_[letter_at_inv(x)].mid(); }

Ival Iet::apply(const Ival& x) const { return x + shift_[letter_at(x)]; }
Ival Iet::apply_inv(const Ival& x) const { return x - shift_[letter_at_inv(x)]; }

int64_t Iet::birkhoff_sum(const std::vector<int64_t>& phi, const Ival& x0, int64_t n) const {
  if (static_cast<int>(phi.size()) != size()) fail(ErrorCode::SizeMismatch, "phi dimension mismatch");
  int64_t acc = 0;
  Ival x = x0;
  for (int64_t k = 0; k < n; ++k) {
    const int a = letter_at(x);
    acc += phi[a];
    x = x + shift_[a];
  }
  return acc;
}

Ival Iet::birkhoff_sum(const std::vector<Ival>& phi, const Ival& x0, int64_t n) const {
  if (static_cast<int>(phi.size()) != size()) fail(ErrorCode::SizeMismatch, "phi dimension mismatch");
  Ival acc(0.0);
  Ival x = x0;
  for (int64_t k = 0; k < n; ++k) {
    const int a = letter_at(x);
    acc += phi[a];
    x = x + shift_[a];
  }
  return acc;
}

std::string Iet::to_text() const {
  // Lengths are written as decimal endpoint pairs; %.17g round-trips doubles
  // exactly, so file -> memory -> file is bit-identical.
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) os << (i ? " " : "") << perm_.top[i];
  os << "\n";
  for (int i = 0; i < size(); ++i) os << (i ? " " : "") << perm_.bot[i];
  os << "\n";
  char buf[64];
  for (int a = 0; a < size(); ++a) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g", len_[a].lo, len_[a].hi);
    os << (a ? " " : "") << buf;
  }
  os << "\n";
  return os.str();
}

Iet Iet::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string l1, l2, l3;
  if (!std::getline(is, l1) || !std::getline(is, l2) || !std::getline(is, l3))
    fail(ErrorCode::ParseError, "IET record needs three lines");
  auto ints = [](const std::string& s) {
    std::istringstream t(s);
    std::vector<int> v;
    int x;
    while (t >> x) v.push_back(x);
    return v;
  };
  Perm p{ints(l1), ints(l2)};
  std::istringstream t(l3);
  std::vector<Ival> len;
  double lo, hi;
  while (t >> lo >> hi) len.push_back(Ival(lo, hi));
  if (static_cast<int>(len.size()) != p.size()) fail(ErrorCode::ParseError, "IET lengths line malformed");
  return p.size() == static_cast<int>(len.size()) && p.is_irreducible() ? make(p, len, false)
                                                                        : make_induced(p, len);
}

std::vector<double> midpoints(const std::vector<Ival>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const Ival& x : v) out.push_back(x.mid());
  return out;
}

FirstReturn first_return(const Iet& T, const Ival& ell, int64_t step_budget) {
  if (!(ell.lo > 0.0)) fail(ErrorCode::DegenerateSubinterval, "induction interval must have positive length");
  if (certainly_greater(ell, T.total()))
    fail(ErrorCode::DegenerateSubinterval, "induction interval exceeds the domain");

  struct Piece {
    Ival a, b;      // current image interval [a, b)
    Ival start;     // left endpoint in J coordinates
    Ival shift;     // accumulated translation: image = original + shift
    int64_t steps;
  };

  // Cut [a,b) at every certified-interior breakpoint and at the J boundary.
  std::deque<Piece> work;
  work.push_back({Ival(0.0), ell, Ival(0.0), Ival(0.0), 0});
  struct Done {
    Ival start, len, shift;
    int64_t steps;
  };
  std::vector<Done> done;
  int64_t spent = 0;

  const auto& xt = T.top_breaks();
  while (!work.empty()) {
    Piece p = work.front();
    work.pop_front();
    if (++spent > step_budget) fail(ErrorCode::BudgetExceeded, "first_return: step budget exhausted");

    // split at interior breakpoints
    std::vector<Ival> cuts;
    for (const Ival& c : xt)
      if (certainly_greater(c, p.a) && certainly_less(c, p.b)) cuts.push_back(c);
    if (!cuts.empty()) {
      Ival prev = p.a;
      Ival prev_start = p.start;
      for (const Ival& c : cuts) {
        Piece q{prev, c, prev_start, p.shift, p.steps};
        work.push_back(q);
        prev_start = prev_start + (c - prev);
        prev = c;
      }
      work.push_back({prev, p.b, prev_start, p.shift, p.steps});
      continue;
    }

    // piece lies in one continuity interval; apply T
    const Ival mid = (p.a + p.b) * 0.5;
    const int letter = T.letter_at(mid.mid());
    const Ival il = T.top_breaks()[T.perm().top_pos()[letter]];
    const Ival ir = il + T.length(letter);
    if (compare(p.a, il) == Order::Less || compare(p.b, ir) == Order::Greater)
      fail(ErrorCode::AmbiguousComparison, "first_return: piece not certifiably inside one letter");
    const Ival sh = T.shift(letter);
    Ival a2 = p.a + sh, b2 = p.b + sh;
    int64_t steps = p.steps + 1;
    Ival shift2 = p.shift + sh;

    // returned to J? split at the J boundary if straddling
    if (certainly_less(a2, ell) && certainly_greater(b2, ell)) {
      const Ival cut_start = p.start + (ell - a2);
      work.push_back({a2, ell, p.start, shift2, steps});
      work.push_back({ell, b2, cut_start, shift2, steps});
      continue;
    }
    if (!certainly_greater(b2, ell)) {
      done.push_back({p.start, b2 - a2, shift2, steps});
    } else {
      work.push_back({a2, b2, p.start, shift2, steps});
    }
  }

  std::sort(done.begin(), done.end(),
            [](const Done& u, const Done& v) { return u.start.mid() < v.start.mid(); });
  const int n = static_cast<int>(done.size());
  if (n < 1) fail(ErrorCode::Internal, "first_return produced no pieces");

  // Assemble the induced IET: letters in domain order, bottom order from images.
  std::vector<Ival> lens(n);
  std::vector<int> topv(n), botv(n);
  std::vector<std::pair<double, int>> images;
  for (int i = 0; i < n; ++i) {
    lens[i] = done[i].len;
    topv[i] = i;
    images.push_back({done[i].start.mid() + done[i].shift.mid(), i});
  }
  std::sort(images.begin(), images.end());
  for (int i = 0; i < n; ++i) botv[i] = images[i].second;

  FirstReturn out;
  std::vector<int64_t> times(n);
  for (int i = 0; i < n; ++i) times[i] = done[i].steps;
  out.induced = Iet::make_induced(Perm{topv, botv}, lens);
  out.return_times = times;
  return out;
}

bool verify_keane(const Iet& T, int64_t depth) {
  const int n = T.size();
  for (int i = 1; i < n; ++i) {
    Ival x = T.top_breaks()[i];
    for (int64_t k = 0; k < depth; ++k) {
      x = T.apply_right(x);
      for (int j = 1; j < n; ++j)
        if (x.intersects(T.top_breaks()[j])) {
          if (certainly_less(x, T.top_breaks()[j]) || certainly_greater(x, T.top_breaks()[j])) continue;
          return false;  // certified or unresolvable collision
        }
    }
  }
  return true;
}

}  // namespace windtree
