#pragma once
//
// Orbit-matrix combinatorics of pairs of partial flags.
//
// A pair of flags of types mu, nu (weak compositions of d) determines an
// n x n matrix of non-negative integers M with row margins mu and column
// margins nu: the orbit matrix.  Closure order between orbits is the
// Bruhat-style dominance order on corner sums, covers are single "swap"
// moves on 2x2 minors with empty interior, and every orbit matrix carries
// a dimension, a staircase classification, and coarsening maps.
//
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace affschur {

// Weak composition: non-negative parts, zeros allowed.
using Composition = std::vector<int>;

int comp_total(const Composition& mu);
// Partial sums d_k = mu_1 + ... + mu_k for k = 1..n (result has length n).
std::vector<int> partial_sums(const Composition& mu);
// All weak compositions of d into exactly n parts, in lexicographic order.
std::vector<Composition> compositions(int d, int n);

// Dense matrix of non-negative integers (small: n <= ~6).
struct OrbitMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;  // row-major

  OrbitMatrix() = default;
  OrbitMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }        // 0-based
  int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }   // 0-based

  static OrbitMatrix diag(const Composition& mu);

  bool operator==(const OrbitMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const OrbitMatrix& o) const { return !(*this == o); }
  bool operator<(const OrbitMatrix& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
  }
  std::string str() const;  // "1,0;0,1" row-major, rows separated by ';'
};

// Row and column margins (R^M, C^M).
std::pair<Composition, Composition> margins(const OrbitMatrix& M);

// Corner sum sm_{kl} = sum_{i<=k, j<=l} m_{ij}; k, l are 1-based, and
// k = 0 or l = 0 give 0.
long corner_sum(const OrbitMatrix& M, int k, int l);

// Dimension of the orbit of M inside the product of flag varieties:
// sum over cells of (d - sm_{ij}) * m_{ij} with d = total of M.
long orbit_dim(const OrbitMatrix& M);

// Closure (Bruhat) order: N <= M iff same margins and sn_{kl} >= sm_{kl}
// for all corners.
bool bruhat_leq(const OrbitMatrix& N, const OrbitMatrix& M);

// Cover relation: M covers N (N <= M, orbit_dim difference 1, single swap).
// Characterization: M - N = E_{a1,b2} + E_{a2,b1} - E_{a1,b1} - E_{a2,b2}
// for some a1 < a2, b1 < b2, and N vanishes on the rectangle
// [a1,a2] x [b1,b2] except at its four corners.
bool is_cover(const OrbitMatrix& N, const OrbitMatrix& M);

// All N covered by M (i.e. M covers N), via the swap characterization.
std::vector<OrbitMatrix> covers_below(const OrbitMatrix& M);

// Saturated chain N = L_0 < L_1 < ... < L_t = M in the closure order with
// every step a cover (t = orbit_dim(M) - orbit_dim(N)).  Pre: N <= M.
std::vector<OrbitMatrix> bruhat_chain(const OrbitMatrix& N, const OrbitMatrix& M);

// Diagonal-distance norm DN(M) = sum |i - j| * m_{ij}.
long diagonal_norm(const OrbitMatrix& M);

// Staircase data of a closed or open orbit matrix: the support cells listed
// in the canonical order, as sequences a (rows), b (columns) with the fine
// type mu~ (the multiplicities).  All entries 1-based.
struct Staircase {
  std::vector<int> a;
  std::vector<int> b;
  Composition mu_fine;
};

struct Classification {
  bool closed = false;
  bool open = false;
  std::optional<Staircase> staircase;  // present iff closed or open
};

// Closed: support cells, in row-major order, have both row and column
// sequences weakly increasing with no repeated (a,b) pair (automatic).
// Open: row sequence weakly increasing, column sequence weakly decreasing
// when cells are listed in row-major order.
Classification classify(const OrbitMatrix& M);

// Block-sum coarsening: row_counts / col_counts give how many consecutive
// fine rows / columns merge into each coarse row / column.
OrbitMatrix coarsen(const OrbitMatrix& M, const std::vector<int>& row_counts,
                    const std::vector<int>& col_counts);

// All matrices with row margins mu and column margins nu (contingency tables).
std::vector<OrbitMatrix> all_matrices(const Composition& mu, const Composition& nu);

}  // namespace affschur
