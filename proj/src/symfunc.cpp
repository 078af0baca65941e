#include "affschur/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affschur {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly LaurentPoly::one(int nvars) {
  LaurentPoly p(nvars);
  p.terms_[ExpVec(nvars, 0)] = 1;
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExpVec& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("monomial: exponent vector length mismatch");
  LaurentPoly p(nvars);
  if (c != 0) p.terms_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int exp) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable: index out of range");
  ExpVec e(nvars, 0);
  e[i - 1] = exp;
  return monomial(nvars, e, 1);
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("add_term: exponent vector length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("+: variable count mismatch");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("-: variable count mismatch");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("*: variable count mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
  return r;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    throw std::invalid_argument("permuted: permutation length mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec f(nvars_, 0);
    for (int i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

LaurentPoly LaurentPoly::swapped(int i, int j) const {
  std::vector<int> perm(nvars_);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[j - 1]);
  return permuted(perm);
}

LaurentPoly LaurentPoly::shifted(const ExpVec& delta) const {
  if (static_cast<int>(delta.size()) != nvars_)
    throw std::invalid_argument("shifted: delta length mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec f(nvars_);
    for (int i = 0; i < nvars_; ++i) f[i] = e[i] + delta[i];
    r.terms_[f] = c;
  }
  return r;
}

int LaurentPoly::min_exponent(const std::vector<int>& vars) const {
  int m = 0;
  for (const auto& [e, c] : terms_)
    for (int v : vars) m = std::min(m, e[v - 1]);
  return m;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    first = false;
    BigInt ac = c < 0 ? BigInt(-c) : c;
    bool printed = false;
    if (ac != 1) {
      os << ac.str();
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) {
        if (printed) os << "*";
        os << "x" << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
        printed = true;
      }
    if (!printed) os << "1";
  }
  return os.str();
}

LaurentPoly complete_h(int k, const std::vector<int>& vars, bool inverse, int nvars) {
  if (k < 0) return LaurentPoly::zero(nvars);
  LaurentPoly r(nvars);
  int m = static_cast<int>(vars.size());
  if (k == 0) return LaurentPoly::one(nvars);
  if (m == 0) return LaurentPoly::zero(nvars);
  // All monomials of degree k in m variables.
  std::vector<int> mult(m, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == m - 1) {
      mult[pos] = rem;
      ExpVec e(nvars, 0);
      for (int t = 0; t < m; ++t) e[vars[t] - 1] = inverse ? -mult[t] : mult[t];
      r.add_term(e, 1);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      mult[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, k);
  return r;
}

LaurentPoly elementary_e(int k, const std::vector<int>& vars, bool inverse, int nvars) {
  if (k < 0) return LaurentPoly::zero(nvars);
  if (k == 0) return LaurentPoly::one(nvars);
  int m = static_cast<int>(vars.size());
  if (k > m) return LaurentPoly::zero(nvars);
  LaurentPoly r(nvars);
  // All k-subsets of the variables.
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ExpVec e(nvars, 0);
    for (int t : idx) e[vars[t] - 1] = inverse ? -1 : 1;
    r.add_term(e, 1);
    int t = k - 1;
    while (t >= 0 && idx[t] == m - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return r;
}

LaurentPoly divide_linear_exact(const LaurentPoly& f, int a, int b) {
  if (a == b) throw std::invalid_argument("divide_linear_exact: a == b");
  int n = f.nvars();
  if (f.is_zero()) return LaurentPoly::zero(n);
  // Clear negative powers of x_a so the synthetic division runs over
  // non-negative degrees in x_a.
  int K = -f.min_exponent({a});
  LaurentPoly g = f;
  if (K > 0) {
    ExpVec delta(n, 0);
    delta[a - 1] = K;
    g = g.shifted(delta);
  }
  // View g as sum_k c_k * x_a^k with c_k free of x_a.
  std::map<int, LaurentPoly> coef;
  for (const auto& [e, c] : g.terms()) {
    int k = e[a - 1];
    ExpVec e0 = e;
    e0[a - 1] = 0;
    auto it = coef.find(k);
    if (it == coef.end()) it = coef.emplace(k, LaurentPoly::zero(n)).first;
    it->second.add_term(e0, c);
  }
  int kmax = coef.rbegin()->first;
  // (x_a - x_b) * sum q_k x_a^k has x_a^k coefficient q_{k-1} - x_b q_k,
  // so q_{k-1} = c_k + x_b q_k going down from q_{kmax} = 0.
  LaurentPoly xb = LaurentPoly::variable(n, b);
  LaurentPoly carry = LaurentPoly::zero(n);  // q_k at current level
  LaurentPoly Q(n);
  for (int k = kmax; k >= 1; --k) {
    LaurentPoly ck = coef.count(k) ? coef[k] : LaurentPoly::zero(n);
    LaurentPoly qk1 = ck + xb * carry;  // q_{k-1}
    ExpVec d(n, 0);
    d[a - 1] = k - 1;
    Q = Q + qk1.shifted(d);
    carry = qk1;
  }
  LaurentPoly c0 = coef.count(0) ? coef[0] : LaurentPoly::zero(n);
  LaurentPoly rem = c0 + xb * carry;
  if (!rem.is_zero())
    throw std::logic_error("divide_linear_exact: nonzero remainder (arithmetic bug)");
  if (K > 0) {
    ExpVec delta(n, 0);
    delta[a - 1] = -K;
    Q = Q.shifted(delta);
  }
  return Q;
}

std::optional<Straightened> straighten(std::vector<int> lam, int m) {
  if (static_cast<int>(lam.size()) > m)
    throw std::invalid_argument("straighten: lambda longer than m");
  lam.resize(m, 0);
  std::vector<int> alpha(m);
  for (int i = 0; i < m; ++i) alpha[i] = lam[i] + (m - 1 - i);
  // Repeats give zero.
  std::vector<int> s = alpha;
  std::sort(s.begin(), s.end(), std::greater<int>());
  for (int i = 0; i + 1 < m; ++i)
    if (s[i] == s[i + 1]) return std::nullopt;
  // Sorting sign: parity of the permutation taking alpha to s.
  int sign = 1;
  std::vector<int> work = alpha;
  for (int i = 0; i < m; ++i) {
    int pos = static_cast<int>(std::max_element(work.begin() + i, work.end()) - work.begin());
    if (pos != i) {
      std::swap(work[i], work[pos]);
      sign = -sign;
    }
  }
  std::vector<int> nu(m);
  for (int i = 0; i < m; ++i) nu[i] = s[i] - (m - 1 - i);
  int shift = 0;
  if (m > 0 && nu[m - 1] < 0) {
    shift = -nu[m - 1];
    for (int i = 0; i < m; ++i) nu[i] += shift;
  }
  return Straightened{sign, nu, shift};
}

namespace {

// Classical Schur polynomial of a weak partition via Jacobi-Trudi,
// s_nu = det( h_{nu_i - i + j} ).
LaurentPoly schur_jacobi_trudi(const std::vector<int>& nu, const std::vector<int>& vars,
                               int nvars) {
  int m = static_cast<int>(nu.size());
  if (m == 0) return LaurentPoly::one(nvars);
  // Permutation expansion of the determinant.
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(nvars);
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly prod = LaurentPoly::one(nvars);
    bool zero = false;
    for (int i = 0; i < m && !zero; ++i) {
      int k = nu[i] - (i + 1) + (perm[i] + 1);
      if (k < 0) {
        zero = true;
        break;
      }
      prod = prod * complete_h(k, vars, false, nvars);
    }
    if (!zero) det = det + (inversions % 2 ? -prod : prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LaurentPoly schur_alternant(const std::vector<int>& lam_padded, const std::vector<int>& vars,
                            int nvars) {
  int m = static_cast<int>(vars.size());
  std::vector<int> alpha(m);
  for (int i = 0; i < m; ++i) alpha[i] = lam_padded[i] + (m - 1 - i);
  int K = 0;
  for (int a : alpha) K = std::max(K, -a);
  for (int& a : alpha) a += K;
  // Alternant sum over all permutations.
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly A(nvars);
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ExpVec e(nvars, 0);
    for (int i = 0; i < m; ++i) e[vars[i] - 1] = alpha[perm[i]];
    A.add_term(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Divide by the Vandermonde prod_{i<j} (y_i - y_j).
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) A = divide_linear_exact(A, vars[i], vars[j]);
  // Undo the exponent shift: divide by (y_1...y_m)^K.
  if (K > 0) {
    ExpVec delta(nvars, 0);
    for (int v : vars) delta[v - 1] = -K;
    A = A.shifted(delta);
  }
  return A;
}

}  // namespace

LaurentPoly schur_general(std::vector<int> lam, const std::vector<int>& vars, int nvars) {
  int m = static_cast<int>(vars.size());
  if (static_cast<int>(lam.size()) > m)
    throw std::invalid_argument("schur_general: lambda longer than variable list");
  lam.resize(m, 0);
  if (m == 0) return LaurentPoly::one(nvars);

  auto st = straighten(lam, m);
  LaurentPoly via_alternant = schur_alternant(lam, vars, nvars);

  LaurentPoly via_jt(nvars);
  if (st) {
    via_jt = schur_jacobi_trudi(st->partition, vars, nvars);
    if (st->sign < 0) via_jt = -via_jt;
    if (st->shift != 0) {
      ExpVec delta(nvars, 0);
      for (int v : vars) delta[v - 1] = -st->shift;
      via_jt = via_jt.shifted(delta);
    }
  }
  if (via_alternant != via_jt)
    throw std::logic_error("schur_general: alternant and Jacobi-Trudi routes disagree");
  return via_alternant;
}

std::vector<std::pair<int, int>> block_intervals(const Blocks& blocks) {
  std::vector<std::pair<int, int>> out;
  int s = 1;
  for (int b : blocks) {
    out.emplace_back(s, s + b - 1);
    s += b;
  }
  return out;
}

int blocks_total(const Blocks& blocks) {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

bool is_block_symmetric(const LaurentPoly& f, const Blocks& blocks) {
  auto iv = block_intervals(blocks);
  for (auto [s, e] : iv)
    for (int i = s; i < e; ++i)
      if (f.swapped(i, i + 1) != f) return false;
  return true;
}

bool refines(const Blocks& fine, const Blocks& coarse) {
  if (blocks_total(fine) != blocks_total(coarse)) return false;
  size_t t = 0;
  for (int c : coarse) {
    int acc = 0;
    while (acc < c) {
      if (t >= fine.size()) return false;
      acc += fine[t++];
    }
    if (acc != c) return false;
  }
  // Trailing zero-size fine blocks may close out zero-size coarse blocks.
  while (t < fine.size() && fine[t] == 0) ++t;
  return t == fine.size();
}

namespace {

// Minimal-length representatives of the cosets of S_fine inside S_coarse,
// as variable permutations of the ambient ring (0-based target arrays),
// enumerated lexicographically; optionally with the sign of each.
std::vector<std::pair<std::vector<int>, int>> coset_reps(const Blocks& fine, const Blocks& coarse,
                                                         int nvars) {
  // Label sequence per coarse block: which fine sub-block occupies each
  // position; distinct multiset permutations in lexicographic order are the
  // minimal-length representatives.
  std::vector<std::pair<std::vector<int>, int>> reps{
      {std::vector<int>(nvars), 1}};
  std::iota(reps[0].first.begin(), reps[0].first.end(), 0);
  size_t t = 0;
  int offset = 0;
  for (int c : coarse) {
    // Fine sub-blocks composing this coarse block.
    std::vector<int> sizes;
    int acc = 0;
    while (acc < c) {
      sizes.push_back(fine[t]);
      acc += fine[t];
      ++t;
    }
    if (sizes.empty()) continue;
    // Build label word 0^s0 1^s1 ... and iterate multiset permutations.
    std::vector<int> labels;
    for (size_t b = 0; b < sizes.size(); ++b)
      for (int r = 0; r < sizes[b]; ++r) labels.push_back(static_cast<int>(b));
    std::vector<std::pair<std::vector<int>, int>> local;  // (perm on this window, sign)
    std::vector<int> word = labels;
    std::sort(word.begin(), word.end());
    do {
      // Variable (sub-block b, r-th member) maps to the position of the r-th
      // occurrence of label b in the word.
      std::vector<int> wperm(c);
      std::vector<int> seen(sizes.size(), 0);
      std::vector<int> startof(sizes.size(), 0);
      for (size_t b = 1; b < sizes.size(); ++b) startof[b] = startof[b - 1] + sizes[b - 1];
      for (int pos = 0; pos < c; ++pos) {
        int b = word[pos];
        wperm[startof[b] + seen[b]] = pos;
        ++seen[b];
      }
      int inv = 0;
      for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
          if (word[i] > word[j]) ++inv;
      local.emplace_back(wperm, inv % 2 ? -1 : 1);
    } while (std::next_permutation(word.begin(), word.end()));
    // Extend every accumulated rep by every local rep.
    std::vector<std::pair<std::vector<int>, int>> next;
    next.reserve(reps.size() * local.size());
    for (const auto& [g, sg] : reps)
      for (const auto& [w, sw] : local) {
        std::vector<int> perm = g;
        for (int r = 0; r < c; ++r) perm[offset + r] = offset + w[r];
        next.emplace_back(std::move(perm), sg * sw);
      }
    reps = std::move(next);
    offset += c;
  }
  // Skip any trailing zero-size fine blocks.
  return reps;
}

}  // namespace

LaurentPoly coset_symmetrize(const LaurentPoly& f, const Blocks& fine, const Blocks& coarse) {
  if (!refines(fine, coarse))
    throw std::invalid_argument("coset_symmetrize: fine does not refine coarse");
  if (!is_block_symmetric(f, fine))
    throw std::invalid_argument("coset_symmetrize: input not fine-symmetric");
  LaurentPoly out(f.nvars());
  for (const auto& [perm, sign] : coset_reps(fine, coarse, f.nvars())) {
    (void)sign;
    out = out + f.permuted(perm);
  }
  return out;
}

LaurentPoly demazure_merge(const LaurentPoly& f, int i) {
  LaurentPoly xi1 = LaurentPoly::variable(f.nvars(), i + 1);
  LaurentPoly xi = LaurentPoly::variable(f.nvars(), i);
  LaurentPoly num = xi1 * f - xi * f.swapped(i, i + 1);
  return divide_linear_exact(num, i + 1, i);
}

namespace {

// Route (a): signed shuffle symmetrization with exact clearing.
// pi_*(g) = [ sum_{shuffles} sgn(sigma) sigma( g * M * V_A * V_B ) ] / Delta_W
// with M = prod_{j in B} x_j^{|A|}, V the intra-block Vandermondes and
// Delta_W the full window Vandermonde (x_later - x_earlier convention).
LaurentPoly pushforward_shuffle(const LaurentPoly& g, int wstart, int p, int q) {
  int n = g.nvars();
  // Window variables (1-based): A = wstart..wstart+p-1, B = next q.
  std::vector<int> avars(p), bvars(q);
  std::iota(avars.begin(), avars.end(), wstart);
  std::iota(bvars.begin(), bvars.end(), wstart + p);
  std::vector<int> wvars(p + q);
  std::iota(wvars.begin(), wvars.end(), wstart);

  // Clear negative exponents on window variables (projection formula: the
  // cleared monomial is window-symmetric, so it commutes with pi_*).
  int K = -g.min_exponent(wvars);
  LaurentPoly gg = g;
  if (K > 0) {
    ExpVec delta(n, 0);
    for (int v : wvars) delta[v - 1] = K;
    gg = gg.shifted(delta);
  }

  LaurentPoly core = gg;
  {
    ExpVec m(n, 0);
    for (int v : bvars) m[v - 1] = p;
    core = core.shifted(m);
  }
  auto vandermonde = [&](const std::vector<int>& vs) {
    LaurentPoly V = LaurentPoly::one(n);
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        V = V * (LaurentPoly::variable(n, vs[j]) - LaurentPoly::variable(n, vs[i]));
    return V;
  };
  core = core * vandermonde(avars) * vandermonde(bvars);

  // Shuffles = minimal coset reps of S_A x S_B in S_W, realized as reps of
  // a fine (p,q) split inside one coarse block; outer variables are pinned
  // by making their fine and coarse blocks coincide.
  Blocks fine2, coarse2;
  if (wstart > 1) {
    fine2.push_back(wstart - 1);
    coarse2.push_back(wstart - 1);
  }
  fine2.push_back(p);
  fine2.push_back(q);
  coarse2.push_back(p + q);
  int rest = n - (wstart - 1) - p - q;
  if (rest > 0) {
    fine2.push_back(rest);
    coarse2.push_back(rest);
  }
  LaurentPoly num(n);
  for (const auto& [perm, sign] : coset_reps(fine2, coarse2, n)) {
    LaurentPoly img = core.permuted(perm);
    num = num + (sign < 0 ? -img : img);
  }
  LaurentPoly res = num;
  for (size_t i = 0; i < wvars.size(); ++i)
    for (size_t j = i + 1; j < wvars.size(); ++j)
      res = divide_linear_exact(res, wvars[j], wvars[i]);
  if (K > 0) {
    ExpVec delta(n, 0);
    for (int v : wvars) delta[v - 1] = -K;
    res = res.shifted(delta);
  }
  return res;
}

// Route (b): refine to singletons and push forward through the triangular
// reduced word of the longest element of the window: Demazure operators act
// as the identity on already-symmetric directions, so the composite along
// (s_1)(s_2 s_1)...(s_{m-1}...s_1) realizes the two-block merge on
// S_A x S_B-symmetric input.
LaurentPoly pushforward_demazure(const LaurentPoly& g, int wstart, int p, int q) {
  int m = p + q;
  LaurentPoly cur = g;
  for (int len = 1; len <= m - 1; ++len)
    for (int j = len; j >= 1; --j) cur = demazure_merge(cur, wstart + j - 1);
  return cur;
}

}  // namespace

SymClass pushforward(const SymClass& f, int l) {
  int nb = static_cast<int>(f.blocks.size());
  if (l < 1 || l + 1 > nb) throw std::invalid_argument("pushforward: block index out of range");
  if (!is_block_symmetric(f.poly, f.blocks))
    throw std::invalid_argument("pushforward: input not block-symmetric");
  auto iv = block_intervals(f.blocks);
  int p = f.blocks[l - 1], q = f.blocks[l];
  int wstart = iv[l - 1].first;

  LaurentPoly a = pushforward_shuffle(f.poly, wstart, p, q);
  LaurentPoly b = pushforward_demazure(f.poly, wstart, p, q);
  if (a != b) throw std::logic_error("pushforward: dual routes disagree (arithmetic bug)");

  Blocks merged;
  for (int t = 0; t < nb; ++t) {
    if (t == l - 1) {
      merged.push_back(p + q);
    } else if (t == l) {
      continue;
    } else {
      merged.push_back(f.blocks[t]);
    }
  }
  if (!is_block_symmetric(a, merged))
    throw std::logic_error("pushforward: result not symmetric in the merged block");
  return SymClass{a, merged};
}

SymClass pullback(const SymClass& f, const Blocks& finer) {
  if (!refines(finer, f.blocks)) throw std::invalid_argument("pullback: not a refinement");
  return SymClass{f.poly, finer};
}

}  // namespace affschur
