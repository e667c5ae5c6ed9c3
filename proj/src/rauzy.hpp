#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iet.hpp"

namespace windtree {

// Dense integer matrix with overflow-checked arithmetic. Cocycle matrices,
// their powers and inverses all live here; everything stays exact.
struct IntMat {
  int n = 0;
  std::vector<int64_t> a;  // row-major

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  static IntMat identity(int n);

  int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const IntMat&) const = default;

  IntMat mul(const IntMat& o) const;
  IntMat transpose() const;
  IntMat pow(int64_t k) const;
  std::vector<int64_t> col_sums() const;
  std::vector<int64_t> row_sums() const;
  int64_t max_entry() const;
  bool is_nonneg() const;
  bool is_positive() const;
  // determinant by fraction-free elimination in 128-bit intermediates
  int64_t det() const;
  // exact inverse of a unimodular matrix (throws if |det| != 1)
  IntMat unimodular_inverse() const;
  std::vector<Ival> apply(const std::vector<Ival>& v) const;          // A v
  std::vector<Ival> apply_transpose(const std::vector<Ival>& v) const;  // A^T v
  std::vector<int64_t> apply(const std::vector<int64_t>& v) const;
  std::vector<int64_t> apply_transpose(const std::vector<int64_t>& v) const;
};

enum class MoveKind : char { Top = 't', Bottom = 'b' };

// One step of Rauzy-Veech induction. The two rightmost intervals (top row
// last vs bottom row last) are compared; the longer letter wins and is cut.
// Lengths transform by lambda = E lambda', test vectors by E^T.
struct RvStep {
  Iet next;
  MoveKind kind;
  int winner;
  int loser;
};

// Combinatorial move on the permutation pair only (Rauzy graph edge).
Perm apply_move(const Perm& p, MoveKind kind);
// Elementary cocycle matrix of a move applied at permutation p.
IntMat elementary_matrix(const Perm& p, MoveKind kind);
// Winner/loser letters of a move at p (winner = the letter that gets cut).
void move_letters(const Perm& p, MoveKind kind, int& winner, int& loser);

RvStep rv_step(const Iet& T);
// Step with the move dictated externally (symbolic replay; no comparison).
RvStep rv_step_forced(const Iet& T, MoveKind kind);

struct RauzyLoop {
  Perm base;
  std::string word;  // e.g. "bt"; applied left to right
  IntMat matrix;     // product of elementary matrices in application order

  std::string to_text() const;
  static RauzyLoop from_text(const std::string& text);
};

RauzyLoop make_loop(const Perm& base, const std::string& word);

// All loops through `start` of word length <= max_len whose matrix has a
// positive power, deduplicated up to cyclic rotation (lexicographically
// minimal rotation among those based at `start` is kept).
std::vector<RauzyLoop> rauzy_loop_search(const Perm& start, int max_len, int workers = 1);

bool is_primitive(const IntMat& A);

struct PerronData {
  Ival rho;                  // Perron eigenvalue
  std::vector<Ival> lengths; // eigenvector, normalized to sum 1, certified
  double resid;              // midpoint residual, for the record
};

// Perron eigenpair of a primitive nonnegative integer matrix, certified via
// Collatz-Wielandt bounds and the Birkhoff-Hopf contraction coefficient.
PerronData fixed_point_lengths(const IntMat& A);

// Periodic-type IET backed by a Rauzy loop: lengths are the Perron vector of
// the loop matrix and induction is replayed symbolically from the word.
struct PeriodicIet {
  Iet iet;         // normalized, domain [0,1)
  RauzyLoop loop;
  Ival rho;

  int period() const { return static_cast<int>(loop.word.size()); }
  const IntMat& A() const { return loop.matrix; }
};

PeriodicIet make_periodic(const RauzyLoop& loop);

// Replays the loop once; returns max deviation of the rescaled lengths from
// the originals (consistency measure for the self-similarity test).
double replay_deviation(const PeriodicIet& P);

struct TowerFloor {
  int j;          // tower letter (base J_j)
  int64_t level;  // floor index l, 0 <= l < q_j
  int letter;     // letter s with T^l(J_j) inside I_s
  Ival left;      // left endpoint of the floor
};

// Rokhlin towers over the depth-k induced interval of a periodic IET.
struct TowerSystem {
  int depth = 1;
  IntMat Ak;                       // cumulative matrix A^k
  std::vector<int64_t> heights;    // q_j = column sums of A^k
  std::vector<TowerFloor> floors;  // all floors, sorted by left endpoint
  Ival scale;                      // |J^(k)| / |I| = rho^-k
  std::vector<Ival> base_lengths;  // |J_j^(k)|

  // index into `floors` sorted by tower then level
  const TowerFloor& floor_of(int j, int64_t level) const;
  std::vector<int> by_tower_level;  // permutation: (j,level) -> index in floors
  std::vector<int64_t> tower_offset;
};

TowerSystem towers(const PeriodicIet& P, int k, int64_t floor_budget = 2'000'000);

}  // namespace windtree
