#include "affschur/circ.hpp"

#include <stdexcept>

namespace affschur {

OrbitMatrix AlmostDiag::materialize() const {
  OrbitMatrix M = OrbitMatrix::diag(base);
  if (kind == 'E')
    M.at(k - 1, k) += 1;
  else
    M.at(k, k - 1) += 1;
  return M;
}

Composition AlmostDiag::row_margin() const {
  Composition r = base;
  r[kind == 'E' ? k - 1 : k] += 1;
  return r;
}

Composition AlmostDiag::col_margin() const {
  Composition c = base;
  c[kind == 'E' ? k : k - 1] += 1;
  return c;
}

bool operator==(const AlmostDiag& x, const AlmostDiag& y) {
  return x.kind == y.kind && x.base == y.base && x.k == y.k;
}

std::optional<OrbitMatrix> circ_almost_diag(const AlmostDiag& D, const OrbitMatrix& M) {
  if (D.col_margin() != margins(M).first) return std::nullopt;
  OrbitMatrix R = M;
  if (D.kind == 'E') {
    // Move one unit of row k+1 up to row k, at the rightmost occupied column.
    int row = D.k;  // 0-based row k+1
    int m = -1;
    for (int j = 0; j < M.cols; ++j)
      if (M.at(row, j) > 0) m = j;
    if (m < 0) return std::nullopt;  // cannot happen: row margin >= 1
    R.at(row, m) -= 1;
    R.at(row - 1, m) += 1;
  } else {
    // Move one unit of row k down to row k+1, at the leftmost occupied column.
    int row = D.k - 1;  // 0-based row k
    int m = -1;
    for (int j = M.cols - 1; j >= 0; --j)
      if (M.at(row, j) > 0) m = j;
    if (m < 0) return std::nullopt;
    R.at(row, m) -= 1;
    R.at(row + 1, m) += 1;
  }
  return R;
}

std::optional<OrbitMatrix> min_divisor(const OrbitMatrix& M, const AlmostDiag& D) {
  if (D.row_margin() != margins(M).first) return std::nullopt;
  int n = M.rows;
  if (D.k < 1 || D.k >= n) return std::nullopt;
  OrbitMatrix S = M;
  if (D.kind == 'E') {
    // Solve E(mu,k) o S = M: take back the unit from row k at the largest
    // column b with m_{k,b} > 0 and row k+1 empty strictly beyond b.
    int r0 = D.k - 1;  // 0-based row k
    int b = -1;
    for (int j = M.cols - 1; j >= 0; --j) {
      bool below_clear = true;
      for (int jj = j + 1; jj < M.cols; ++jj)
        if (M.at(r0 + 1, jj) > 0) below_clear = false;
      if (M.at(r0, j) > 0 && below_clear) {
        b = j;
        break;
      }
    }
    if (b < 0) return std::nullopt;
    S.at(r0, b) -= 1;
    S.at(r0 + 1, b) += 1;
  } else {
    // Solve F(mu,k) o S = M: take back the unit from row k+1 at the smallest
    // column b with m_{k+1,b} > 0 and row k empty strictly before b.
    int r1 = D.k;  // 0-based row k+1
    int b = -1;
    for (int j = 0; j < M.cols; ++j) {
      bool above_clear = true;
      for (int jj = 0; jj < j; ++jj)
        if (M.at(r1 - 1, jj) > 0) above_clear = false;
      if (M.at(r1, j) > 0 && above_clear) {
        b = j;
        break;
      }
    }
    if (b < 0) return std::nullopt;
    S.at(r1, b) -= 1;
    S.at(r1 - 1, b) += 1;
  }
  // Certify: D o S must reproduce M.
  auto back = circ_almost_diag(D, S);
  if (!back || *back != M) return std::nullopt;
  return S;
}

std::optional<std::pair<AlmostDiag, OrbitMatrix>> strict_factor_step(const OrbitMatrix& M) {
  if (M.rows != M.cols) throw std::invalid_argument("strict_factor_step: matrix not square");
  int n = M.rows;
  auto R = margins(M).first;
  // Upper branch: some entry strictly above the diagonal.
  int b_up = -1;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (M.at(i, j) > 0) b_up = std::max(b_up, j);
  if (b_up >= 0) {
    int a = -1;
    for (int i = 0; i < b_up; ++i)
      if (M.at(i, b_up) > 0) a = i;  // maximal row above the diagonal cell
    Composition base = R;
    base[a] -= 1;
    AlmostDiag D{'E', base, a + 1};
    OrbitMatrix N = M;
    N.at(a, b_up) -= 1;
    N.at(a + 1, b_up) += 1;
    if (diagonal_norm(N) != diagonal_norm(M) - 1)
      throw std::logic_error("strict_factor_step: norm did not decrease");
    auto back = circ_almost_diag(D, N);
    if (!back || *back != M) throw std::logic_error("strict_factor_step: certificate failed");
    return std::pair{D, N};
  }
  // Lower branch: some entry strictly below the diagonal.
  int b_lo = n;
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < n; ++i)
      if (M.at(i, j) > 0) b_lo = std::min(b_lo, j);
  if (b_lo < n) {
    int a = -1;
    for (int i = n - 1; i > b_lo; --i)
      if (M.at(i, b_lo) > 0) a = i;  // minimal row below the diagonal cell
    Composition base = R;
    base[a] -= 1;
    AlmostDiag D{'F', base, a};  // F at step a (1-based: rows a, a+1 are 0-based a-1, a)
    OrbitMatrix N = M;
    N.at(a, b_lo) -= 1;
    N.at(a - 1, b_lo) += 1;
    if (diagonal_norm(N) != diagonal_norm(M) - 1)
      throw std::logic_error("strict_factor_step: norm did not decrease");
    auto back = circ_almost_diag(D, N);
    if (!back || *back != M) throw std::logic_error("strict_factor_step: certificate failed");
    return std::pair{D, N};
  }
  return std::nullopt;  // diagonal
}

std::vector<AlmostDiag> factor(const OrbitMatrix& M) {
  std::vector<AlmostDiag> out;
  OrbitMatrix cur = M;
  while (auto step = strict_factor_step(cur)) {
    out.push_back(step->first);
    cur = step->second;
  }
  if (cur != OrbitMatrix::diag(margins(M).second))
    throw std::logic_error("factor: did not terminate at the diagonal");
  return out;
}

std::optional<OrbitMatrix> circ(const OrbitMatrix& M, const OrbitMatrix& N) {
  if (margins(M).second != margins(N).first) return std::nullopt;
  auto ds = factor(M);
  OrbitMatrix cur = N;
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    auto next = circ_almost_diag(*it, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

}  // namespace affschur
