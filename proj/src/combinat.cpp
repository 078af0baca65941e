#include "affschur/combinat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affschur {

int comp_total(const Composition& mu) {
  return std::accumulate(mu.begin(), mu.end(), 0);
}

std::vector<int> partial_sums(const Composition& mu) {
  std::vector<int> d(mu.size());
  int s = 0;
  for (size_t k = 0; k < mu.size(); ++k) {
    s += mu[k];
    d[k] = s;
  }
  return d;
}

std::vector<Composition> compositions(int d, int n) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  // Lexicographic enumeration by recursion on the first part.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  if (n <= 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

OrbitMatrix OrbitMatrix::diag(const Composition& mu) {
  int n = static_cast<int>(mu.size());
  OrbitMatrix M(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = mu[i];
  return M;
}

std::string OrbitMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    if (i) os << ';';
    for (int j = 0; j < cols; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
  }
  return os.str();
}

std::pair<Composition, Composition> margins(const OrbitMatrix& M) {
  Composition r(M.rows, 0), c(M.cols, 0);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      r[i] += M.at(i, j);
      c[j] += M.at(i, j);
    }
  return {r, c};
}

long corner_sum(const OrbitMatrix& M, int k, int l) {
  long s = 0;
  for (int i = 0; i < std::min(k, M.rows); ++i)
    for (int j = 0; j < std::min(l, M.cols); ++j) s += M.at(i, j);
  return s;
}

long orbit_dim(const OrbitMatrix& M) {
  long d = corner_sum(M, M.rows, M.cols);
  long dim = 0;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M.at(i, j) != 0) dim += (d - corner_sum(M, i + 1, j + 1)) * M.at(i, j);
  return dim;
}

bool bruhat_leq(const OrbitMatrix& N, const OrbitMatrix& M) {
  if (N.rows != M.rows || N.cols != M.cols) return false;
  if (margins(N) != margins(M)) return false;
  for (int k = 1; k <= N.rows; ++k)
    for (int l = 1; l <= N.cols; ++l)
      if (corner_sum(N, k, l) < corner_sum(M, k, l)) return false;
  return true;
}

bool is_cover(const OrbitMatrix& N, const OrbitMatrix& M) {
  if (N.rows != M.rows || N.cols != M.cols) return false;
  if (margins(N) != margins(M)) return false;
  // Difference must be a single 2x2 swap pattern.
  int a1 = -1, a2 = -1, b1 = -1, b2 = -1;
  int nonzero = 0;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      int dlt = M.at(i, j) - N.at(i, j);
      if (dlt == 0) continue;
      if (dlt != 1 && dlt != -1) return false;
      ++nonzero;
      if (nonzero > 4) return false;
    }
  if (nonzero != 4) return false;
  // Locate the corners: +1 at (a1,b2), (a2,b1); -1 at (a1,b1), (a2,b2).
  std::vector<std::pair<int, int>> plus, minus;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      int dlt = M.at(i, j) - N.at(i, j);
      if (dlt == 1) plus.emplace_back(i, j);
      if (dlt == -1) minus.emplace_back(i, j);
    }
  if (plus.size() != 2 || minus.size() != 2) return false;
  // minus cells are (a1,b1) and (a2,b2) with a1<a2, b1<b2; plus cells the
  // anti-diagonal corners of the same rectangle.
  auto [m1, m2] = std::pair(minus[0], minus[1]);
  if (m1.first == m2.first || m1.second == m2.second) return false;
  if (m1.first > m2.first) std::swap(m1, m2);
  if (m1.second > m2.second) return false;  // minus cells must be NW and SE
  a1 = m1.first; b1 = m1.second; a2 = m2.first; b2 = m2.second;
  std::set<std::pair<int, int>> pl(plus.begin(), plus.end());
  if (!pl.count({a1, b2}) || !pl.count({a2, b1})) return false;
  // Interior emptiness: N (equivalently M) vanishes on [a1,a2]x[b1,b2]
  // off the four corners.
  for (int i = a1; i <= a2; ++i)
    for (int j = b1; j <= b2; ++j) {
      bool corner = (i == a1 || i == a2) && (j == b1 || j == b2);
      if (!corner && N.at(i, j) != 0) return false;
    }
  return true;
}

std::vector<OrbitMatrix> covers_below(const OrbitMatrix& M) {
  std::vector<OrbitMatrix> out;
  for (int a1 = 0; a1 < M.rows; ++a1)
    for (int a2 = a1 + 1; a2 < M.rows; ++a2)
      for (int b1 = 0; b1 < M.cols; ++b1)
        for (int b2 = b1 + 1; b2 < M.cols; ++b2) {
          if (M.at(a1, b2) < 1 || M.at(a2, b1) < 1) continue;
          OrbitMatrix N = M;
          N.at(a1, b2) -= 1;
          N.at(a2, b1) -= 1;
          N.at(a1, b1) += 1;
          N.at(a2, b2) += 1;
          if (is_cover(N, M)) out.push_back(N);
        }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long diagonal_norm(const OrbitMatrix& M) {
  long s = 0;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) s += static_cast<long>(std::abs(i - j)) * M.at(i, j);
  return s;
}

std::vector<OrbitMatrix> bruhat_chain(const OrbitMatrix& N, const OrbitMatrix& M) {
  if (!bruhat_leq(N, M)) throw std::invalid_argument("bruhat_chain: N is not <= M");
  std::vector<OrbitMatrix> chain{N};
  OrbitMatrix cur = N;
  while (cur != M) {
    // One certified step: a swap L with cur < L (cover) and L <= M.
    // Among all candidates take minimal phi = (a2-a1)+(b2-b1), then
    // lexicographically smallest (a1,b1,a2,b2).
    bool found = false;
    OrbitMatrix best;
    std::tuple<int, int, int, int, int> best_key;
    for (int a1 = 0; a1 < cur.rows; ++a1)
      for (int a2 = a1 + 1; a2 < cur.rows; ++a2)
        for (int b1 = 0; b1 < cur.cols; ++b1)
          for (int b2 = b1 + 1; b2 < cur.cols; ++b2) {
            if (cur.at(a1, b1) < 1 || cur.at(a2, b2) < 1) continue;
            OrbitMatrix L = cur;
            L.at(a1, b1) -= 1;
            L.at(a2, b2) -= 1;
            L.at(a1, b2) += 1;
            L.at(a2, b1) += 1;
            if (!is_cover(cur, L)) continue;
            if (!bruhat_leq(L, M)) continue;
            std::tuple<int, int, int, int, int> key{(a2 - a1) + (b2 - b1), a1, b1, a2, b2};
            if (!found || key < best_key) {
              found = true;
              best = L;
              best_key = key;
            }
          }
    if (!found) throw std::logic_error("bruhat_chain: no cover step found (should not happen)");
    chain.push_back(best);
    cur = best;
  }
  return chain;
}

Classification classify(const OrbitMatrix& M) {
  Classification res;
  std::vector<int> a, b;
  Composition mu_fine;
  // Row-major (row, column) lexicographic order builds the closed staircase.
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M.at(i, j) != 0) {
        a.push_back(i + 1);
        b.push_back(j + 1);
        mu_fine.push_back(M.at(i, j));
      }
  // Closed: in row-major order, a is automatically weakly increasing and
  // within a row b strictly increases, so the condition is that b never
  // drops between consecutive support cells.  Consecutive (a,b) pairs are
  // automatically distinct.
  bool b_incr = true;
  for (size_t t = 1; t < b.size(); ++t)
    if (b[t] < b[t - 1]) b_incr = false;
  res.closed = b_incr;
  // Open: the support cells, listed with rows increasing and columns
  // decreasing inside each row, must have globally non-increasing columns.
  // Equivalently each nonempty row's rightmost cell sits no further right
  // than the previous nonempty row's leftmost cell.
  bool open_ok = true;
  int prev_min_col = M.cols;  // sentinel: to the right of everything
  for (int i = 0; i < M.rows && open_ok; ++i) {
    int row_min = -1, row_max = -1;
    for (int j = 0; j < M.cols; ++j)
      if (M.at(i, j) != 0) {
        if (row_min < 0) row_min = j;
        row_max = j;
      }
    if (row_min < 0) continue;  // empty row
    if (row_max > prev_min_col) open_ok = false;
    prev_min_col = row_min;
  }
  res.open = open_ok;
  if (res.closed) res.staircase = Staircase{a, b, mu_fine};
  return res;
}

OrbitMatrix coarsen(const OrbitMatrix& M, const std::vector<int>& row_counts,
                    const std::vector<int>& col_counts) {
  if (std::accumulate(row_counts.begin(), row_counts.end(), 0) != M.rows ||
      std::accumulate(col_counts.begin(), col_counts.end(), 0) != M.cols)
    throw std::invalid_argument("coarsen: group sizes do not match matrix shape");
  OrbitMatrix out(static_cast<int>(row_counts.size()), static_cast<int>(col_counts.size()));
  int i0 = 0;
  for (size_t gi = 0; gi < row_counts.size(); ++gi) {
    int j0 = 0;
    for (size_t gj = 0; gj < col_counts.size(); ++gj) {
      int s = 0;
      for (int i = i0; i < i0 + row_counts[gi]; ++i)
        for (int j = j0; j < j0 + col_counts[gj]; ++j) s += M.at(i, j);
      out.at(static_cast<int>(gi), static_cast<int>(gj)) = s;
      j0 += col_counts[gj];
    }
    i0 += row_counts[gi];
  }
  return out;
}

std::vector<OrbitMatrix> all_matrices(const Composition& mu, const Composition& nu) {
  if (comp_total(mu) != comp_total(nu))
    throw std::invalid_argument("all_matrices: margins have different totals");
  int nr = static_cast<int>(mu.size()), nc = static_cast<int>(nu.size());
  std::vector<OrbitMatrix> out;
  OrbitMatrix cur(nr, nc);
  Composition colrem = nu;
  // Fill row by row; within a row, distribute mu[i] over columns bounded by
  // remaining column budgets.
  auto rec = [&](auto&& self, int i, int j, int rem) -> void {
    if (i == nr) {
      out.push_back(cur);
      return;
    }
    if (j == nc - 1) {
      if (rem <= colrem[j]) {
        cur.at(i, j) = rem;
        colrem[j] -= rem;
        self(self, i + 1, 0, i + 1 < nr ? mu[i + 1] : 0);
        colrem[j] += rem;
        cur.at(i, j) = 0;
      }
      return;
    }
    for (int v = 0; v <= std::min(rem, colrem[j]); ++v) {
      cur.at(i, j) = v;
      colrem[j] -= v;
      self(self, i, j + 1, rem - v);
      colrem[j] += v;
      cur.at(i, j) = 0;
    }
  };
  if (nr == 0) {
    if (nc == 0 || comp_total(nu) == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, 0, mu[0]);
  return out;
}

}  // namespace affschur
