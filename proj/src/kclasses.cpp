#include "affschur/kclasses.hpp"

#include <algorithm>
#include <cassert>

namespace affschur {

namespace {

// 1-based variable positions of block k of mu inside d = |mu| variables.
std::vector<int> block_vars(const Composition& mu, int k) {
  auto ps = partial_sums(mu);
  int lo = (k == 1) ? 0 : ps[static_cast<size_t>(k) - 2];
  int hi = ps[static_cast<size_t>(k) - 1];
  std::vector<int> v;
  for (int i = lo + 1; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool odd(int s) { return ((s % 2) + 2) % 2 == 1; }

}  // namespace

GenSymbol gen_E(int k, int p) { return {GenKind::E, k, p}; }
GenSymbol gen_F(int k, int p) { return {GenKind::F, k, p}; }
GenSymbol gen_H(int k, int p) { return {GenKind::H, k, p}; }
GenSymbol gen_Hcf(int k, int p) { return {GenKind::Hcf, k, p}; }

WordSum word_sum(long long c, Word w) { return {WTerm{c, std::move(w)}}; }

WordSum operator+(const WordSum& a, const WordSum& b) {
  WordSum r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

WordSum operator-(const WordSum& a) {
  WordSum r = a;
  for (auto& t : r) t.coeff = -t.coeff;
  return r;
}

WordSum operator-(const WordSum& a, const WordSum& b) { return a + (-b); }

void flagfun_add(FlagFun& acc, const Composition& nu, const LaurentPoly& poly,
                 long long coeff) {
  if (poly.is_zero() || coeff == 0) return;
  LaurentPoly add = (coeff == 1) ? poly : poly.scaled(BigInt(coeff));
  auto it = acc.find(nu);
  if (it == acc.end()) {
    acc.emplace(nu, SymClass{add, nu});
  } else {
    it->second.poly = it->second.poly + add;
    if (it->second.poly.is_zero()) acc.erase(it);
  }
}

bool flagfun_equal(const FlagFun& a, const FlagFun& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [nu, cls] : a) {
    auto it = b.find(nu);
    if (it == b.end() || !(it->second == cls)) return false;
  }
  return true;
}

LaurentPoly h_local_poly(const Composition& mu, int k, int r) {
  int n = static_cast<int>(mu.size());
  int d = comp_total(mu);
  if (k < 1 || k > n) throw std::invalid_argument("h_local_poly: bad step index");
  if (k == n) {
    int a = mu[static_cast<size_t>(n) - 1];
    if (a == 0) return LaurentPoly(d);
    auto A = block_vars(mu, n);
    if (r >= 0) return complete_h(r, A, false, d);
    if (r > -a) return LaurentPoly(d);
    LaurentPoly f = elementary_e(a, A, true, d) * complete_h(-r - a, A, true, d);
    return odd(a - 1) ? -f : f;
  }
  int a = mu[static_cast<size_t>(k) - 1];
  int b = mu[static_cast<size_t>(k)];
  if (a == 0 && b == 0) return LaurentPoly(d);
  auto A = block_vars(mu, k);
  auto B = block_vars(mu, k + 1);
  if (r >= b && (b > 0 || r >= 0)) {
    LaurentPoly f = elementary_e(b, B, false, d) * complete_h(r - b, concat(A, B), false, d);
    return odd(b) ? -f : f;
  }
  if (r <= -a && (a > 0 || r <= 0)) {
    LaurentPoly f = elementary_e(a, A, true, d) * complete_h(-r - a, concat(A, B), true, d);
    return odd(a - 1) ? -f : f;
  }
  return LaurentPoly(d);
}

FlagFun apply_gen(const GenSymbol& g, const FlagFun& psi, int n) {
  FlagFun out;
  for (const auto& [nu, cls] : psi) {
    if (static_cast<int>(nu.size()) != n)
      throw std::invalid_argument("apply_gen: component length mismatch");
    switch (g.kind) {
      case GenKind::E: {
        if (g.k < 1 || g.k >= n) throw std::invalid_argument("apply_gen: E step out of range");
        int k = g.k;
        if (nu[static_cast<size_t>(k) - 1] < 1) break;
        Blocks fine = nu;
        fine[static_cast<size_t>(k) - 1] -= 1;
        fine.insert(fine.begin() + k, 1);
        SymClass cur = pullback(cls, fine);
        int pos = partial_sums(nu)[static_cast<size_t>(k) - 1];  // last var of block k
        if (g.p != 0)
          cur.poly = cur.poly * LaurentPoly::variable(comp_total(nu), pos, g.p);
        cur = pushforward(cur, k + 1);
        Composition target = nu;
        target[static_cast<size_t>(k) - 1] -= 1;
        target[static_cast<size_t>(k)] += 1;
        flagfun_add(out, target, cur.poly);
        break;
      }
      case GenKind::F: {
        if (g.k < 1 || g.k >= n) throw std::invalid_argument("apply_gen: F step out of range");
        int k = g.k;
        if (nu[static_cast<size_t>(k)] < 1) break;
        Blocks fine = nu;
        fine[static_cast<size_t>(k)] -= 1;
        fine.insert(fine.begin() + k, 1);
        SymClass cur = pullback(cls, fine);
        int pos = partial_sums(nu)[static_cast<size_t>(k) - 1] + 1;  // first var of block k+1
        if (g.p != 0)
          cur.poly = cur.poly * LaurentPoly::variable(comp_total(nu), pos, g.p);
        cur = pushforward(cur, k);
        Composition target = nu;
        target[static_cast<size_t>(k) - 1] += 1;
        target[static_cast<size_t>(k)] -= 1;
        flagfun_add(out, target, cur.poly);
        break;
      }
      case GenKind::H: {
        if (g.k != n)
          throw std::logic_error("apply_gen: H with k < n must be expanded first");
        flagfun_add(out, nu, cls.poly * h_local_poly(nu, g.k, g.p));
        break;
      }
      case GenKind::Hcf: {
        if (g.k < 1 || g.k > n) throw std::invalid_argument("apply_gen: H step out of range");
        flagfun_add(out, nu, cls.poly * h_local_poly(nu, g.k, g.p));
        break;
      }
    }
  }
  return out;
}

namespace {

// Replace every H letter with k < n by its commutator definition
// E_k(p) F_k(0) - F_k(0) E_k(p), distributing over the word.
std::vector<std::pair<long long, Word>> expand_h(const Word& w, int n) {
  std::vector<std::pair<long long, Word>> out{{1, {}}};
  for (const auto& g : w) {
    if (g.kind == GenKind::H && g.k < n) {
      std::vector<std::pair<long long, Word>> next;
      next.reserve(out.size() * 2);
      for (const auto& [c, ww] : out) {
        Word pos = ww, neg = ww;
        pos.push_back(gen_E(g.k, g.p));
        pos.push_back(gen_F(g.k, 0));
        neg.push_back(gen_F(g.k, 0));
        neg.push_back(gen_E(g.k, g.p));
        next.emplace_back(c, std::move(pos));
        next.emplace_back(-c, std::move(neg));
      }
      out = std::move(next);
    } else {
      for (auto& [c, ww] : out) ww.push_back(g);
    }
  }
  return out;
}

}  // namespace

FlagFun apply_word(const Word& w, const FlagFun& psi, int n) {
  FlagFun acc;
  for (const auto& [coeff, flat] : expand_h(w, n)) {
    FlagFun cur = psi;
    for (const auto& g : flat) cur = apply_gen(g, cur, n);
    for (const auto& [nu, cls] : cur) flagfun_add(acc, nu, cls.poly, coeff);
  }
  return acc;
}

FlagFun apply_wordsum(const WordSum& ws, const FlagFun& psi, int n) {
  FlagFun acc;
  for (const auto& term : ws) {
    FlagFun part = apply_word(term.word, psi, n);
    for (const auto& [nu, cls] : part) flagfun_add(acc, nu, cls.poly, term.coeff);
  }
  return acc;
}

std::vector<std::vector<int>> partitions_in_box(int a, int c) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // depth-first over weakly decreasing part sequences
  auto rec = [&](auto&& self, int maxpart, int rows_left) -> void {
    out.push_back(cur);
    if (rows_left == 0) return;
    for (int part = std::min(maxpart, c); part >= 1; --part) {
      cur.push_back(part);
      self(self, part, rows_left - 1);
      cur.pop_back();
    }
  };
  rec(rec, c, a);
  return out;
}

std::vector<LaurentPoly> schur_box_basis(const Composition& mu) {
  int n = static_cast<int>(mu.size());
  int d = comp_total(mu);
  auto ps = partial_sums(mu);
  std::vector<std::vector<std::vector<int>>> per_block(static_cast<size_t>(n));
  for (int b = 1; b <= n; ++b)
    per_block[static_cast<size_t>(b) - 1] =
        partitions_in_box(mu[static_cast<size_t>(b) - 1], d - ps[static_cast<size_t>(b) - 1]);
  std::vector<LaurentPoly> out;
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  while (true) {
    LaurentPoly f = LaurentPoly::one(d);
    for (int b = 1; b <= n; ++b) {
      const auto& lam = per_block[static_cast<size_t>(b) - 1][idx[static_cast<size_t>(b) - 1]];
      if (!lam.empty()) f = f * schur_general(lam, block_vars(mu, b), d);
    }
    out.push_back(f);
    int b = n - 1;
    while (b >= 0) {
      if (++idx[static_cast<size_t>(b)] < per_block[static_cast<size_t>(b)].size()) break;
      idx[static_cast<size_t>(b)] = 0;
      --b;
    }
    if (b < 0) break;
  }
  return out;
}

bool op_equal(const WordSum& lhs, const WordSum& rhs, int n, int d) {
  for (const auto& mu : compositions(d, n)) {
    for (const auto& f : schur_box_basis(mu)) {
      FlagFun psi{{mu, SymClass{f, mu}}};
      if (!flagfun_equal(apply_wordsum(lhs, psi, n), apply_wordsum(rhs, psi, n)))
        return false;
    }
  }
  return true;
}

std::vector<std::array<int, 3>> cells_row_major(const OrbitMatrix& M) {
  std::vector<std::array<int, 3>> cells;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M.at(i, j) > 0) cells.push_back({i + 1, j + 1, M.at(i, j)});
  return cells;
}

Blocks cell_blocks(const OrbitMatrix& M) {
  Blocks b;
  for (const auto& c : cells_row_major(M)) b.push_back(c[2]);
  return b;
}

namespace {

// 1-based position of the first variable of cell (i, j) in row-major order.
int var_position(const OrbitMatrix& M, int i, int j) {
  int pos = 0;
  for (const auto& c : cells_row_major(M)) {
    if (c[0] == i && c[1] == j) return pos + 1;
    pos += c[2];
  }
  throw std::invalid_argument("var_position: cell not present");
}

}  // namespace

KClass local_E(const Composition& mu, int k, int p) {
  int n = static_cast<int>(mu.size());
  if (k < 1 || k >= n) throw std::invalid_argument("local_E: step out of range");
  OrbitMatrix supp = OrbitMatrix::diag(mu);
  supp.at(k - 1, k) += 1;
  int d = comp_total(mu) + 1;
  int pos = partial_sums(mu)[static_cast<size_t>(k) - 1] + 1;
  LaurentPoly val = LaurentPoly::variable(d, pos, p);
  return KClass{supp, SymClass{val, cell_blocks(supp)}};
}

KClass local_F(const Composition& mu, int k, int q) {
  int n = static_cast<int>(mu.size());
  if (k < 1 || k >= n) throw std::invalid_argument("local_F: step out of range");
  OrbitMatrix supp = OrbitMatrix::diag(mu);
  supp.at(k, k - 1) += 1;
  int d = comp_total(mu) + 1;
  int pos = partial_sums(mu)[static_cast<size_t>(k) - 1] + 1;
  LaurentPoly val = LaurentPoly::variable(d, pos, q);
  return KClass{supp, SymClass{val, cell_blocks(supp)}};
}

KClass local_H(const Composition& nu, int k, int r) {
  return local_diag(nu, h_local_poly(nu, k, r));
}

KClass local_diag(const Composition& nu, const LaurentPoly& value) {
  OrbitMatrix supp = OrbitMatrix::diag(nu);
  return KClass{supp, SymClass{value, cell_blocks(supp)}};
}

namespace {

enum class Shape { Diag, Elike, Flike, Other };

struct ShapeInfo {
  Shape shape = Shape::Other;
  int k = 0;           // step of the unit off-diagonal cell
  Composition base;    // diagonal entries
};

ShapeInfo classify_support(const OrbitMatrix& M) {
  ShapeInfo info;
  if (M.rows != M.cols) return info;
  int n = M.rows;
  info.base.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) info.base[static_cast<size_t>(i)] = M.at(i, i);
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && M.at(i, j) != 0) off.push_back({i, j});
  if (off.empty()) {
    info.shape = Shape::Diag;
    return info;
  }
  if (off.size() == 1) {
    auto [i, j] = off[0];
    if (M.at(i, j) == 1 && j == i + 1) {
      info.shape = Shape::Elike;
      info.k = i + 1;
      return info;
    }
    if (M.at(i, j) == 1 && i == j + 1) {
      info.shape = Shape::Flike;
      info.k = j + 1;
      return info;
    }
  }
  return info;
}

// Coefficient and exponent of a one-term value concentrated on one
// variable; anything else is outside the covered convolution patterns.
std::pair<BigInt, int> pure_power(const LaurentPoly& f, int pos) {
  if (f.terms().size() != 1)
    throw UncoveredCase("star_local: off-diagonal value is not a monomial");
  const auto& [e, c] = *f.terms().begin();
  for (size_t i = 0; i < e.size(); ++i)
    if (static_cast<int>(i) != pos - 1 && e[i] != 0)
      throw UncoveredCase("star_local: off-diagonal value involves other cells");
  return {c, e[static_cast<size_t>(pos) - 1]};
}

OrbitMatrix diag_plus(const Composition& mu, std::vector<std::array<int, 3>> extra) {
  OrbitMatrix M = OrbitMatrix::diag(mu);
  for (const auto& [i, j, v] : extra) M.at(i - 1, j - 1) += v;
  return M;
}

Composition minus_e(Composition v, int k) {
  v[static_cast<size_t>(k) - 1] -= 1;
  return v;
}

}  // namespace

std::optional<KClass> star_local(const KClass& c1, const KClass& c2) {
  auto [R1, C1] = margins(c1.support);
  auto [R2, C2] = margins(c2.support);
  if (C1 != R2) return std::nullopt;
  ShapeInfo s1 = classify_support(c1.support);
  ShapeInfo s2 = classify_support(c2.support);
  if (s1.shape == Shape::Other || s2.shape == Shape::Other)
    throw UncoveredCase("star_local: unsupported operand support");
  int d = comp_total(C1);

  // Diagonal against diagonal: plain product.
  if (s1.shape == Shape::Diag && s2.shape == Shape::Diag) {
    return KClass{c1.support,
                  SymClass{c1.value.poly * c2.value.poly, c1.value.blocks}};
  }
  // Diagonal first: refine its value along the second support's rows.
  if (s1.shape == Shape::Diag) {
    Blocks fine = cell_blocks(c2.support);
    SymClass lifted = pullback(c1.value, fine);
    return KClass{c2.support, SymClass{lifted.poly * c2.value.poly, fine}};
  }
  // Diagonal second: refine its value along the first support's columns
  // (contiguous in row-major order for unit off-diagonal supports).
  if (s2.shape == Shape::Diag) {
    Blocks fine = cell_blocks(c1.support);
    SymClass lifted = pullback(c2.value, fine);
    return KClass{c1.support, SymClass{c1.value.poly * lifted.poly, fine}};
  }

  auto power1 = pure_power(c1.value.poly,
                           var_position(c1.support,
                                        s1.shape == Shape::Elike ? s1.k : s1.k + 1,
                                        s1.shape == Shape::Elike ? s1.k + 1 : s1.k));
  auto power2 = pure_power(c2.value.poly,
                           var_position(c2.support,
                                        s2.shape == Shape::Elike ? s2.k : s2.k + 1,
                                        s2.shape == Shape::Elike ? s2.k + 1 : s2.k));
  BigInt coeff = power1.first * power2.first;
  int p = power1.second;
  int q = power2.second;

  if (s1.shape == Shape::Elike && s2.shape == Shape::Elike) {
    if (s1.k == s2.k) {
      // Same step: both exponents land in a doubled cell, giving a
      // two-variable Schur value.
      int k = s1.k;
      Composition mu = C1;  // = R2
      OrbitMatrix supp = diag_plus(minus_e(minus_e(mu, k), k + 1), {{k, k + 1, 2}});
      int z = var_position(supp, k, k + 1);
      LaurentPoly val = schur_general({p, q}, {z, z + 1}, d).scaled(coeff);
      return KClass{supp, SymClass{val, cell_blocks(supp)}};
    }
    if (s1.k == s2.k + 1) {
      // Descending adjacent steps compose transversally.
      int l = s2.k;
      Composition mu = minus_e(minus_e(R2, l), l + 2);
      OrbitMatrix supp = diag_plus(mu, {{l, l + 1, 1}, {l + 1, l + 2, 1}});
      LaurentPoly val = LaurentPoly::variable(d, var_position(supp, l, l + 1), q) *
                        LaurentPoly::variable(d, var_position(supp, l + 1, l + 2), p);
      return KClass{supp, SymClass{val.scaled(coeff), cell_blocks(supp)}};
    }
    if (std::abs(s1.k - s2.k) > 1) {
      int k = s1.k, l = s2.k;
      Composition mu = minus_e(minus_e(C1, k + 1), l);
      OrbitMatrix supp = diag_plus(mu, {{k, k + 1, 1}, {l, l + 1, 1}});
      LaurentPoly val = LaurentPoly::variable(d, var_position(supp, k, k + 1), p) *
                        LaurentPoly::variable(d, var_position(supp, l, l + 1), q);
      return KClass{supp, SymClass{val.scaled(coeff), cell_blocks(supp)}};
    }
    throw UncoveredCase("star_local: ascending adjacent raising pair");
  }

  if (s1.shape == Shape::Flike && s2.shape == Shape::Flike) {
    if (s1.k == s2.k) {
      int k = s1.k;
      Composition mu = C1;
      OrbitMatrix supp = diag_plus(minus_e(minus_e(mu, k), k + 1), {{k + 1, k, 2}});
      int z = var_position(supp, k + 1, k);
      LaurentPoly val = schur_general({q, p}, {z, z + 1}, d).scaled(coeff);
      return KClass{supp, SymClass{val, cell_blocks(supp)}};
    }
    if (s2.k == s1.k + 1) {
      int l = s1.k;
      Composition mu = minus_e(minus_e(C1, l), l + 2);
      OrbitMatrix supp = diag_plus(mu, {{l + 1, l, 1}, {l + 2, l + 1, 1}});
      LaurentPoly val = LaurentPoly::variable(d, var_position(supp, l + 1, l), p) *
                        LaurentPoly::variable(d, var_position(supp, l + 2, l + 1), q);
      return KClass{supp, SymClass{val.scaled(coeff), cell_blocks(supp)}};
    }
    if (std::abs(s1.k - s2.k) > 1) {
      int k = s1.k, l = s2.k;
      Composition mu = minus_e(minus_e(C1, k), l + 1);
      OrbitMatrix supp = diag_plus(mu, {{k + 1, k, 1}, {l + 1, l, 1}});
      LaurentPoly val = LaurentPoly::variable(d, var_position(supp, k + 1, k), p) *
                        LaurentPoly::variable(d, var_position(supp, l + 1, l), q);
      return KClass{supp, SymClass{val.scaled(coeff), cell_blocks(supp)}};
    }
    throw UncoveredCase("star_local: descending adjacent lowering pair");
  }

  if (s1.shape == Shape::Elike && s2.shape == Shape::Flike) {
    int k = s1.k, l = s2.k;
    if (k == l) throw UncoveredCase("star_local: raising then lowering at one step");
    Composition mu = minus_e(minus_e(C1, k + 1), l + 1);
    OrbitMatrix supp = diag_plus(mu, {{k, k + 1, 1}, {l + 1, l, 1}});
    LaurentPoly val = LaurentPoly::variable(d, var_position(supp, k, k + 1), p) *
                      LaurentPoly::variable(d, var_position(supp, l + 1, l), q);
    return KClass{supp, SymClass{val.scaled(coeff), cell_blocks(supp)}};
  }

  // Flike then Elike.
  {
    int l = s1.k, k = s2.k;
    if (k == l) throw UncoveredCase("star_local: lowering then raising at one step");
    Composition mu = minus_e(minus_e(C1, k), l);
    OrbitMatrix supp = diag_plus(mu, {{k, k + 1, 1}, {l + 1, l, 1}});
    LaurentPoly val = LaurentPoly::variable(d, var_position(supp, k, k + 1), q) *
                      LaurentPoly::variable(d, var_position(supp, l + 1, l), p);
    return KClass{supp, SymClass{val.scaled(coeff), cell_blocks(supp)}};
  }
}

SymClass act_kclass(const KClass& c, const SymClass& input) {
  auto [R, C] = margins(c.support);
  if (input.blocks != R)
    throw std::invalid_argument("act_kclass: input blocks must equal the row type");
  Blocks fine = cell_blocks(c.support);
  SymClass cur = pullback(input, fine);
  cur.poly = cur.poly * c.value.poly;

  auto cells = cells_row_major(c.support);
  int prev_col = 0;
  std::vector<int> group_counts;
  for (size_t t = 0; t < cells.size();) {
    int j = cells[t][1];
    if (j <= prev_col)
      throw UncoveredCase("act_kclass: column order incompatible with cell order");
    size_t t2 = t;
    while (t2 < cells.size() && cells[t2][1] == j) ++t2;
    group_counts.push_back(static_cast<int>(t2 - t));
    prev_col = j;
    t = t2;
  }
  int pos = 1;
  for (int cnt : group_counts) {
    for (int s = 1; s < cnt; ++s) cur = pushforward(cur, pos);
    pos += 1;
  }
  // The merged blocks are the nonzero column sums in column order.
  Blocks expect;
  for (int v : C)
    if (v > 0) expect.push_back(v);
  if (cur.blocks != expect)
    throw std::logic_error("act_kclass: column regrouping mismatch");
  return SymClass{cur.poly, C};
}

}  // namespace affschur
