#include "rauzy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace windtree {

IntMat IntMat::identity(int n) {
  IntMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {
int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer matrix product overflow");
  return r;
}
int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer matrix sum overflow");
  return r;
}
}  // namespace

IntMat IntMat::mul(const IntMat& o) const {
  IntMat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int64_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(x, o.at(k, j)));
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMat IntMat::pow(int64_t k) const {
  IntMat r = identity(n), base = *this;
  while (k > 0) {
    if (k & 1) r = r.mul(base);
    if (k >>= 1) base = base.mul(base);
  }
  return r;
}

std::vector<int64_t> IntMat::col_sums() const {
  std::vector<int64_t> s(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[j] = checked_add(s[j], at(i, j));
  return s;
}

std::vector<int64_t> IntMat::row_sums() const {
  std::vector<int64_t> s(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i] = checked_add(s[i], at(i, j));
  return s;
}

int64_t IntMat::max_entry() const {
  int64_t m = 0;
  for (int64_t x : a) m = std::max(m, x);
  return m;
}

bool IntMat::is_nonneg() const {
  for (int64_t x : a)
    if (x < 0) return false;
  return true;
}

bool IntMat::is_positive() const {
  for (int64_t x : a)
    if (x <= 0) return false;
  return true;
}

int64_t IntMat::det() const {
  // Bareiss fraction-free elimination in 128-bit intermediates.
  std::vector<__int128> m(a.begin(), a.end());
  auto at128 = [&](int i, int j) -> __int128& { return m[static_cast<size_t>(i) * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at128(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (at128(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at128(k, j), at128(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at128(i, j) = (at128(i, j) * at128(k, k) - at128(i, k) * at128(k, j)) / prev;
    prev = at128(k, k);
  }
  __int128 d = at128(n - 1, n - 1) * sign;
  if (d > INT64_MAX || d < INT64_MIN) fail(ErrorCode::Overflow, "determinant overflow");
  return static_cast<int64_t>(d);
}

IntMat IntMat::unimodular_inverse() const {
  const int64_t d = det();
  if (d != 1 && d != -1) fail(ErrorCode::InvalidParams, "matrix is not unimodular");
  // Gauss-Jordan over rationals stays integral for unimodular input if done
  // via adjugate: inv = adj / det. Compute adjugate by cofactors (n small).
  IntMat inv(n);
  std::vector<int64_t> sub(static_cast<size_t>(n - 1) * (n - 1));
  IntMat minor(n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      const int64_t cof = ((i + j) % 2 ? -1 : 1) * (n > 1 ? minor.det() : 1);
      inv.at(j, i) = d * cof;  // d = 1/d for d = +-1
    }
  return inv;
}

std::vector<Ival> IntMat::apply(const std::vector<Ival>& v) const {
  std::vector<Ival> r(n, Ival(0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != 0) r[i] += Ival(static_cast<double>(at(i, j))) * v[j];
  return r;
}

std::vector<Ival> IntMat::apply_transpose(const std::vector<Ival>& v) const {
  std::vector<Ival> r(n, Ival(0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(j, i) != 0) r[i] += Ival(static_cast<double>(at(j, i))) * v[j];
  return r;
}

std::vector<int64_t> IntMat::apply(const std::vector<int64_t>& v) const {
  std::vector<int64_t> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
  return r;
}

std::vector<int64_t> IntMat::apply_transpose(const std::vector<int64_t>& v) const {
  std::vector<int64_t> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] = checked_add(r[i], checked_mul(at(j, i), v[j]));
  return r;
}

void move_letters(const Perm& p, MoveKind kind, int& winner, int& loser) {
  if (kind == MoveKind::Top) {
    winner = p.top.back();
    loser = p.bot.back();
  } else {
    winner = p.bot.back();
    loser = p.top.back();
  }
}

Perm apply_move(const Perm& p, MoveKind kind) {
  int winner, loser;
  move_letters(p, kind, winner, loser);
  if (winner == loser) fail(ErrorCode::Internal, "degenerate Rauzy move");
  Perm q = p;
  // loser letter is removed from the end of the other row and reinserted
  // immediately after the winner
  std::vector<int>& row = (kind == MoveKind::Top) ? q.bot : q.top;
  row.pop_back();
  auto it = std::find(row.begin(), row.end(), winner);
  row.insert(it + 1, loser);
  return q;
}

IntMat elementary_matrix(const Perm& p, MoveKind kind) {
  int winner, loser;
  move_letters(p, kind, winner, loser);
  IntMat e = IntMat::identity(p.size());
  e.at(winner, loser) += 1;
  return e;
}

RvStep rv_step(const Iet& T) {
  const Perm& p = T.perm();
  const int at = p.top.back(), ab = p.bot.back();
  const Order ord = compare(T.length(at), T.length(ab));
  if (ord == Order::Ambiguous)
    fail(ErrorCode::TieAmbiguous,
         "rightmost interval lengths are not certifiably distinct (Keane violation or precision loss)");
  const MoveKind kind = (ord == Order::Greater) ? MoveKind::Top : MoveKind::Bottom;
  return rv_step_forced(T, kind);
}

RvStep rv_step_forced(const Iet& T, MoveKind kind) {
  const Perm& p = T.perm();
  int winner, loser;
  move_letters(p, kind, winner, loser);
  std::vector<Ival> len = T.lengths();
  len[winner] = len[winner] - len[loser];
  RvStep out{Iet::make_induced(apply_move(p, kind), len), kind, winner, loser};
  return out;
}

std::string RauzyLoop::to_text() const {
  std::ostringstream os;
  os << "perm";
  for (int x : base.top) os << " " << x;
  os << " |";
  for (int x : base.bot) os << " " << x;
  os << "\nword " << word << "\n";
  for (int i = 0; i < matrix.n; ++i) {
    os << "mat";
    for (int j = 0; j < matrix.n; ++j) os << " " << matrix.at(i, j);
    os << "\n";
  }
  return os.str();
}

RauzyLoop RauzyLoop::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  RauzyLoop L;
  if (!(is >> tok) || tok != "perm") fail(ErrorCode::ParseError, "loop record: missing perm header");
  std::string rest;
  std::getline(is, rest);
  const auto bar = rest.find('|');
  if (bar == std::string::npos) fail(ErrorCode::ParseError, "loop record: malformed perm header");
  auto ints = [](const std::string& s) {
    std::istringstream t(s);
    std::vector<int> v;
    int x;
    while (t >> x) v.push_back(x);
    return v;
  };
  L.base.top = ints(rest.substr(0, bar));
  L.base.bot = ints(rest.substr(bar + 1));
  if (!(is >> tok) || tok != "word") fail(ErrorCode::ParseError, "loop record: missing word");
  is >> L.word;
  return make_loop(L.base, L.word);
}

RauzyLoop make_loop(const Perm& base, const std::string& word) {
  Perm p = base;
  IntMat A = IntMat::identity(base.size());
  for (char c : word) {
    if (c != 't' && c != 'b') fail(ErrorCode::ParseError, "loop word must be over {t,b}");
    const MoveKind k = (c == 't') ? MoveKind::Top : MoveKind::Bottom;
    A = A.mul(elementary_matrix(p, k));
    p = apply_move(p, k);
  }
  if (!(p == base)) fail(ErrorCode::InvalidParams, "word does not close up at the base permutation");
  return RauzyLoop{base, word, A};
}

bool is_primitive(const IntMat& A) {
  const int n = A.n;
  if (n > 63) fail(ErrorCode::InvalidParams, "primitivity check limited to n <= 63");
  std::vector<uint64_t> rows(n, 0), cur;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A.at(i, j) > 0) rows[i] |= (uint64_t{1} << j);
  cur = rows;
  const uint64_t full = (n == 63) ? ~uint64_t{0} >> 1 : (uint64_t{1} << n) - 1;
  const int wielandt = (n - 1) * (n - 1) + 1;
  auto all_full = [&](const std::vector<uint64_t>& m) {
    for (uint64_t r : m)
      if (r != full) return false;
    return true;
  };
  for (int k = 1; k <= wielandt; ++k) {
    if (all_full(cur)) return true;
    std::vector<uint64_t> next(n, 0);
    for (int i = 0; i < n; ++i) {
      uint64_t acc = 0, r = cur[i];
      while (r) {
        const int j = __builtin_ctzll(r);
        r &= r - 1;
        acc |= rows[j];
      }
      next[i] = acc;
    }
    cur = next;
  }
  return all_full(cur);
}

namespace {
void loop_dfs(const Perm& start, Perm p, std::string& word, int max_len,
              std::vector<std::string>& found) {
  if (!word.empty() && p == start) found.push_back(word);
  if (static_cast<int>(word.size()) >= max_len) return;
  for (MoveKind k : {MoveKind::Bottom, MoveKind::Top}) {
    word.push_back(static_cast<char>(k));
    loop_dfs(start, apply_move(p, k), word, max_len, found);
    word.pop_back();
  }
}

// Keep the word only if it is the lexicographically minimal cyclic rotation
// among rotations whose base node is `start`.
bool is_canonical_rotation(const Perm& start, const std::string& w) {
  Perm p = start;
  for (size_t k = 0; k + 1 < w.size() + 1; ++k) {
    if (k > 0 && p == start) {
      const std::string rot = w.substr(k) + w.substr(0, k);
      if (rot < w) return false;
    }
    if (k < w.size())
      p = apply_move(p, w[k] == 't' ? MoveKind::Top : MoveKind::Bottom);
  }
  return true;
}
}  // namespace

std::vector<RauzyLoop> rauzy_loop_search(const Perm& start, int max_len, int workers) {
  std::vector<std::string> words;
  if (max_len >= 1) {
    if (workers > 1) {
      // split by the first move; dedup set is per-branch, merged after
      std::vector<std::string> half[2];
      std::thread t0([&] {
        std::string w = "b";
        loop_dfs(start, apply_move(start, MoveKind::Bottom), w, max_len, half[0]);
      });
      std::string w = "t";
      loop_dfs(start, apply_move(start, MoveKind::Top), w, max_len, half[1]);
      t0.join();
      words = half[0];
      words.insert(words.end(), half[1].begin(), half[1].end());
    } else {
      std::string w;
      loop_dfs(start, start, w, max_len, words);
    }
  }
  std::vector<RauzyLoop> out;
  for (const std::string& w : words) {
    if (!is_canonical_rotation(start, w)) continue;
    RauzyLoop L = make_loop(start, w);
    if (!is_primitive(L.matrix)) continue;
    out.push_back(std::move(L));
  }
  std::sort(out.begin(), out.end(), [](const RauzyLoop& a, const RauzyLoop& b) {
    return a.word.size() != b.word.size() ? a.word.size() < b.word.size() : a.word < b.word;
  });
  return out;
}

PerronData fixed_point_lengths(const IntMat& A) {
  const int n = A.n;
  if (!A.is_nonneg()) fail(ErrorCode::InvalidParams, "cocycle matrix must be nonnegative");
  if (!is_primitive(A)) fail(ErrorCode::NotPrimitive, "matrix has no positive power");

  // smallest positive power, as interval matrix (exact while entries < 2^53)
  int p = 1;
  std::vector<std::vector<Ival>> B(n, std::vector<Ival>(n));
  {
    IntMat probe = A;
    while (!probe.is_positive()) {
      probe = probe.mul(A);
      ++p;
      if (p > (n - 1) * (n - 1) + 1) fail(ErrorCode::NotPrimitive, "no positive power within Wielandt bound");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B[i][j] = Ival(static_cast<double>(probe.at(i, j)));
  }

  auto bmul = [&](const std::vector<double>& v) {
    std::vector<double> r(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += B[i][j].mid() * v[j];
    return r;
  };

  std::vector<double> v(n, 1.0 / n);
  for (int it = 0; it < 400; ++it) {
    std::vector<double> w = bmul(v);
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= s;
    double delta = 0.0;
    for (int i = 0; i < n; ++i) delta = std::max(delta, std::fabs(w[i] - v[i]));
    v = w;
    if (delta < 1e-16 && it > 4) break;
  }

  // Collatz-Wielandt enclosure of rho(B) and Birkhoff-Hopf vector certification
  std::vector<Ival> iv(n), w(n, Ival(0.0));
  for (int i = 0; i < n; ++i) iv[i] = Ival(v[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += B[i][j] * iv[j];
  Ival rmin = w[0] / iv[0], rmax = rmin;
  for (int i = 1; i < n; ++i) {
    const Ival r = w[i] / iv[i];
    rmin = Ival(std::min(rmin.lo, r.lo), std::min(rmin.hi, r.hi));
    rmax = Ival(std::max(rmax.lo, r.lo), std::max(rmax.hi, r.hi));
  }
  const Ival rho_B(rmin.lo, rmax.hi);

  // contraction coefficient of B in the Hilbert metric
  Ival phi(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          const Ival q = (B[i][k] * B[j][l]) / (B[j][k] * B[i][l]);
          if (q.lo < phi.lo) phi = Ival(q.lo, std::min(phi.hi, std::max(q.lo, 1.0)));
        }
    }
  if (!(phi.lo > 0.0)) fail(ErrorCode::Internal, "vanishing Birkhoff coefficient for positive matrix");
  const Ival sphi = sqrt(Ival(phi.lo, phi.lo));
  const Ival kappa = (Ival(1.0) - sphi) / (Ival(1.0) + sphi);
  if (!(kappa.hi < 1.0)) fail(ErrorCode::Internal, "no contraction certificate");

  // Hilbert distance d(v, Bv) and the resulting enclosure of the Perron direction
  const Ival dvbv = log(Ival(rmax.hi, rmax.hi) / Ival(rmin.lo, rmin.lo));
  const Ival dstar = Ival(0.0, dvbv.hi) / (Ival(1.0) - Ival(kappa.hi, kappa.hi));
  const Ival grow = exp(Ival(2.0) * Ival(0.0, dstar.hi));

  Ival vsum(0.0);
  for (int i = 0; i < n; ++i) vsum += iv[i];
  PerronData out;
  out.lengths.resize(n);
  for (int i = 0; i < n; ++i) {
    const Ival c = iv[i] / vsum;
    out.lengths[i] = Ival(next_down(c.lo / grow.hi), next_up(c.hi * grow.hi));
  }
  out.rho = (p == 1) ? rho_B : pow_real(rho_B, Ival(1.0) / Ival(static_cast<double>(p)));

  // midpoint residual of the eigen equation for A itself
  double resid = 0.0;
  {
    std::vector<double> lm = midpoints(out.lengths);
    const double rho_mid = out.rho.mid();
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += static_cast<double>(A.at(i, j)) * lm[j];
      resid = std::max(resid, std::fabs(s - rho_mid * lm[i]));
    }
  }
  out.resid = resid;
  if (resid > 1e-12)
    fail(ErrorCode::NearUnitEigenvalue, "Perron residual failed to converge below 1e-12");
  return out;
}

PeriodicIet make_periodic(const RauzyLoop& loop) {
  PerronData pd = fixed_point_lengths(loop.matrix);
  PeriodicIet P;
  P.iet = Iet::make(loop.base, pd.lengths, false);
  P.loop = loop;
  P.rho = pd.rho;
  return P;
}

double replay_deviation(const PeriodicIet& P) {
  Iet T = P.iet;
  for (char c : P.loop.word)
    T = rv_step_forced(T, c == 't' ? MoveKind::Top : MoveKind::Bottom).next;
  if (!(T.perm() == P.iet.perm())) fail(ErrorCode::Internal, "loop replay does not close combinatorially");
  double dev = 0.0;
  for (int a = 0; a < T.size(); ++a)
    dev = std::max(dev, std::fabs((T.length(a) * P.rho).mid() - P.iet.length(a).mid()));
  return dev;
}

const TowerFloor& TowerSystem::floor_of(int j, int64_t level) const {
  return floors[by_tower_level[static_cast<size_t>(tower_offset[j] + level)]];
}

TowerSystem towers(const PeriodicIet& P, int k, int64_t floor_budget) {
  if (k < 1) fail(ErrorCode::InvalidParams, "tower depth must be >= 1");
  const Iet& T = P.iet;
  const int n = T.size();
  TowerSystem ts;
  ts.depth = k;
  ts.Ak = P.A().pow(k);
  ts.heights = ts.Ak.col_sums();
  int64_t total_floors = 0;
  for (int64_t q : ts.heights) total_floors = checked_add(total_floors, q);
  if (total_floors > floor_budget) fail(ErrorCode::BudgetExceeded, "tower floor budget exceeded");

  ts.scale = pow_int(Ival(1.0) / P.rho, k);
  ts.base_lengths.resize(n);
  for (int j = 0; j < n; ++j) ts.base_lengths[j] = T.length(j) * ts.scale;

  // depth-1 floor table by direct iteration of the base intervals
  const Ival s1 = Ival(1.0) / P.rho;
  const auto tpos = T.perm().top_pos();
  struct F1 {
    int letter;
    Ival left;
  };
  std::vector<std::vector<F1>> f1(n);
  const std::vector<int64_t> q1 = P.A().col_sums();
  for (int j = 0; j < n; ++j) {
    Ival cur = T.top_left(j) * s1;
    const Ival size = T.length(j) * s1;
    f1[j].reserve(q1[j]);
    for (int64_t l = 0; l < q1[j]; ++l) {
      const int s = T.letter_at((cur + size * 0.5).mid());
      // floor must sit inside I_s up to enclosure slack
      const Ival il = T.top_left(s), ir = il + T.length(s);
      if (certainly_less(cur, il) || certainly_greater(cur + size, ir))
        fail(ErrorCode::AmbiguousComparison, "tower floor straddles a continuity interval");
      f1[j].push_back({s, cur});
      cur = cur + T.shift(s);
    }
    if (!(cur.mid() < s1.hi + 1e-9))
      fail(ErrorCode::Internal, "tower does not return to the induced interval");
  }

  // Depth-k floors are the admissible paths (e_1..e_k). Choosing the
  // innermost edge e_k first (tower j_k free), the outer tower letters are
  // forced: j_{r} = s(e_{r+1}). Left endpoints compose as
  //   left(e_r .. e_k) = u(e_r) + rho^-1 * left(e_{r+1} .. e_k),
  // with u(e) = left(floor e) - rho^-1 * left(I_{tower(e)}), and the T-level
  // of the floor accumulates per edge e_r = (j_r, l_r) as
  //   sum_{i < l_r} q^(r-1)[ letter of floor (j_r, i) ],
  // where q^(r) are the column sums of A^r (q^(0) = 1).
  std::vector<std::vector<int64_t>> qr(k);
  qr[0].assign(n, 1);
  for (int r = 1; r < k; ++r) qr[r] = P.A().pow(r).col_sums();

  const Ival inv_rho = s1;
  std::vector<TowerFloor>& floors = ts.floors;
  floors.reserve(total_floors);

  struct Frame {
    int tower;            // j_r at this level
    int64_t l;            // next floor index to try
    int64_t time_before;  // T-level contribution of floors below l
  };
  for (int jk = 0; jk < n; ++jk) {
    std::vector<Frame> st;
    std::vector<Ival> left_acc;     // left(e_{r+1}..e_k), one per frame
    std::vector<int64_t> level_acc; // accumulated T-level, one per frame
    st.push_back({jk, 0, 0});
    left_acc.push_back(T.top_left(jk));
    level_acc.push_back(0);
    while (!st.empty()) {
      Frame& cur = st.back();
      const int r = k - static_cast<int>(st.size()) + 1;  // level being chosen (k = innermost)
      if (cur.l >= q1[cur.tower]) {
        st.pop_back();
        left_acc.pop_back();
        level_acc.pop_back();
        continue;
      }
      const F1& fl = f1[cur.tower][cur.l];
      const Ival u = fl.left - inv_rho * T.top_left(cur.tower);
      const Ival new_left = u + inv_rho * left_acc.back();
      const int64_t new_level = level_acc.back() + cur.time_before;
      cur.time_before += qr[r - 1][fl.letter];
      ++cur.l;
      if (r == 1) {
        floors.push_back(TowerFloor{jk, new_level, fl.letter, new_left});
      } else {
        st.push_back({fl.letter, 0, 0});
        left_acc.push_back(new_left);
        level_acc.push_back(new_level);
      }
    }
  }

  if (static_cast<int64_t>(floors.size()) != total_floors)
    fail(ErrorCode::Internal, "tower floor enumeration mismatch");

  // sort by left endpoint; build (j, level) index
  std::vector<int> order(floors.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return floors[x].left.mid() < floors[y].left.mid(); });
  std::vector<TowerFloor> sorted;
  sorted.reserve(floors.size());
  for (int idx : order) sorted.push_back(floors[idx]);
  ts.floors = std::move(sorted);

  ts.tower_offset.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) ts.tower_offset[j + 1] = ts.tower_offset[j] + ts.heights[j];
  ts.by_tower_level.assign(ts.floors.size(), -1);
  for (size_t idx = 0; idx < ts.floors.size(); ++idx) {
    const TowerFloor& f = ts.floors[idx];
    if (f.level < 0 || f.level >= ts.heights[f.j])
      fail(ErrorCode::Internal, "tower floor level out of range");
    ts.by_tower_level[static_cast<size_t>(ts.tower_offset[f.j] + f.level)] = static_cast<int>(idx);
  }
  for (int x : ts.by_tower_level)
    if (x < 0) fail(ErrorCode::Internal, "tower level indexing has gaps");
  return ts;
}

}  // namespace windtree
