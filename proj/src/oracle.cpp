#include "affschur/oracle.hpp"

#include <map>
#include <stdexcept>

namespace affschur {

namespace {

int fq_inv(int a, int q) {
  a = ((a % q) + q) % q;
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw std::invalid_argument("fq_inv: not invertible");
}

// In-place reduction to RREF; returns the rank.
int rref_in_place(FqMatrix& A, int q) {
  int rows = static_cast<int>(A.size());
  int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] % q != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[r], A[piv]);
    int inv = fq_inv(A[r][c], q);
    for (int j = 0; j < cols; ++j) A[r][j] = A[r][j] * inv % q;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      int f = A[i][c];
      for (int j = 0; j < cols; ++j)
        A[i][j] = ((A[i][j] - f * A[r][j]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

// All k-element subsets of {0, ..., d-1}, lexicographic.
void subsets_rec(int d, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c <= d - (k - static_cast<int>(cur.size())); ++c) {
    cur.push_back(c);
    subsets_rec(d, k, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int fq_rank(FqMatrix A, int q) { return rref_in_place(A, q); }

FqMatrix fq_rref(FqMatrix A, int q) {
  int r = rref_in_place(A, q);
  A.resize(static_cast<size_t>(r));
  return A;
}

std::vector<FqMatrix> all_subspaces(int d, int k, int q) {
  std::vector<std::vector<int>> pivot_sets;
  std::vector<int> cur;
  subsets_rec(d, k, 0, cur, pivot_sets);
  std::vector<FqMatrix> out;
  for (const auto& piv : pivot_sets) {
    // Free entries: (i, j) with j > piv[i] and j not a pivot column.
    std::vector<std::pair<int, int>> free_pos;
    std::vector<bool> is_piv(static_cast<size_t>(d), false);
    for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
    for (int i = 0; i < k; ++i)
      for (int j = piv[static_cast<size_t>(i)] + 1; j < d; ++j)
        if (!is_piv[static_cast<size_t>(j)]) free_pos.emplace_back(i, j);

    long total = 1;
    for (size_t t = 0; t < free_pos.size(); ++t) total *= q;
    for (long code = 0; code < total; ++code) {
      FqMatrix B(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(d), 0));
      for (int i = 0; i < k; ++i) B[static_cast<size_t>(i)][static_cast<size_t>(piv[static_cast<size_t>(i)])] = 1;
      long rem = code;
      for (const auto& [i, j] : free_pos) {
        B[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(rem % q);
        rem /= q;
      }
      out.push_back(std::move(B));
    }
  }
  return out;
}

FqFlag standard_flag(const Composition& mu) {
  int d = comp_total(mu);
  auto ps = partial_sums(mu);
  FqFlag flag;
  for (int dk : ps) {
    FqMatrix B(static_cast<size_t>(dk), std::vector<int>(static_cast<size_t>(d), 0));
    for (int i = 0; i < dk; ++i) B[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    flag.push_back(std::move(B));
  }
  return flag;
}

namespace {

// V (RREF) is contained in W (RREF): stacking adds no rank.
bool contained_in(const FqMatrix& V, const FqMatrix& W, int q) {
  FqMatrix S = W;
  for (const auto& row : V) S.push_back(row);
  return fq_rank(std::move(S), q) == static_cast<int>(W.size());
}

void flags_rec(const std::vector<int>& ps, int level,
               const std::map<int, std::vector<FqMatrix>>& by_dim, int q,
               FqFlag& cur, std::vector<FqFlag>& out) {
  if (level == static_cast<int>(ps.size())) {
    out.push_back(cur);
    return;
  }
  for (const auto& S : by_dim.at(ps[static_cast<size_t>(level)])) {
    if (level > 0 && !contained_in(cur.back(), S, q)) continue;
    cur.push_back(S);
    flags_rec(ps, level + 1, by_dim, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FqFlag> all_flags(const Composition& mu, int q) {
  int d = comp_total(mu);
  auto ps = partial_sums(mu);
  std::map<int, std::vector<FqMatrix>> by_dim;
  for (int dk : ps)
    if (!by_dim.count(dk)) by_dim[dk] = all_subspaces(d, dk, q);
  std::vector<FqFlag> out;
  FqFlag cur;
  flags_rec(ps, 0, by_dim, q, cur, out);
  return out;
}

int fq_intersection_dim(const FqMatrix& U, const FqMatrix& W, int q) {
  FqMatrix S = U;
  for (const auto& row : W) S.push_back(row);
  return static_cast<int>(U.size()) + static_cast<int>(W.size()) -
         fq_rank(std::move(S), q);
}

OrbitMatrix orbit_matrix_of_pair(const FqFlag& U, const FqFlag& W, int q) {
  int n1 = static_cast<int>(U.size());
  int n2 = static_cast<int>(W.size());
  // dims[i][j] = dim(U_i intersect W_j), with U_0 = W_0 = 0.
  std::vector<std::vector<int>> dims(static_cast<size_t>(n1) + 1,
                                     std::vector<int>(static_cast<size_t>(n2) + 1, 0));
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n2; ++j)
      dims[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          fq_intersection_dim(U[static_cast<size_t>(i - 1)], W[static_cast<size_t>(j - 1)], q);
  OrbitMatrix M(n1, n2);
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n2; ++j)
      M.at(i - 1, j - 1) = dims[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                           dims[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -
                           dims[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] +
                           dims[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  return M;
}

std::set<OrbitMatrix> realized_matrices(const Composition& mu, const Composition& nu,
                                        int q) {
  if (comp_total(mu) != comp_total(nu))
    throw std::invalid_argument("realized_matrices: totals differ");
  FqFlag U = standard_flag(mu);
  std::set<OrbitMatrix> out;
  for (const auto& W : all_flags(nu, q)) out.insert(orbit_matrix_of_pair(U, W, q));
  return out;
}

std::optional<OrbitMatrix> circ_oracle(const OrbitMatrix& M, const OrbitMatrix& N,
                                       int q, long cap) {
  auto [muM, nuM] = margins(M);
  auto [muN, nuN] = margins(N);
  if (nuM != muN) return std::nullopt;

  FqFlag U = standard_flag(muM);
  auto flagsV = all_flags(nuM, q);
  auto flagsW = all_flags(nuN, q);

  std::set<OrbitMatrix> collected;
  long scanned = 0;
  for (const auto& V : flagsV) {
    if (++scanned > cap) throw std::runtime_error("circ_oracle: cap exceeded");
    if (orbit_matrix_of_pair(U, V, q) != M) continue;
    for (const auto& W : flagsW) {
      if (++scanned > cap) throw std::runtime_error("circ_oracle: cap exceeded");
      if (orbit_matrix_of_pair(V, W, q) != N) continue;
      collected.insert(orbit_matrix_of_pair(U, W, q));
    }
  }
  if (collected.empty())
    throw std::runtime_error("circ_oracle: no realizing triple found");

  for (const auto& cand : collected) {
    bool dominates = true;
    for (const auto& other : collected)
      if (!bruhat_leq(other, cand)) {
        dominates = false;
        break;
      }
    if (dominates) return cand;
  }
  throw std::runtime_error("circ_oracle: collected positions have no maximum");
}

}  // namespace affschur
