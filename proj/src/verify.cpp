#include "affschur/verify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "affschur/symfunc.hpp"

namespace affschur {

namespace {

std::string comp_str(const Composition& mu) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> relation_tags() {
  return {"1.1", "1.2",  "1.3",  "2.1",  "2.2", "2.3",  "3.1",  "3.2",
          "4.1", "5.1",  "5.1p", "5.1pp", "5.2", "5.3",  "5.3p", "6.1",
          "6.1p", "6.1pp", "6.2",  "6.3",  "6.3p", "plactic-a", "plactic-b",
          "plactic-c"};
}

Report verify_relation(const std::string& tag, int n, int d, int window) {
  Report rep;
  rep.tag = tag;
  rep.n = n;
  rep.d = d;
  rep.window = window;

  auto check = [&](const WordSum& lhs, const WordSum& rhs, int i, int j, int p, int q) {
    if (!rep.pass) return;
    ++rep.instances;
    if (!op_equal(lhs, rhs, n, d)) {
      rep.pass = false;
      std::ostringstream os;
      os << tag << " fails at i=" << i;
      if (j != 0) os << ", j=" << j;
      os << ", p=" << p << ", q=" << q;
      rep.counterexample = os.str();
    }
  };

  const auto E = gen_E;
  const auto F = gen_F;
  const auto H = gen_H;
  auto W2 = [](GenSymbol a, GenSymbol b) { return word_sum(1, {a, b}); };
  auto W3 = [](GenSymbol a, GenSymbol b, GenSymbol c) {
    return word_sum(1, {a, b, c});
  };
  const int w = window;

  if (tag == "1.1") {
    for (int i = 1; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(E(i, p), E(i, q)), -W2(E(i, q - 1), E(i, p + 1)), i, 0, p, q);
  } else if (tag == "1.2") {
    for (int i = 1; i <= n - 2; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(E(i + 1, p), E(i, q)),
                W2(E(i, q), E(i + 1, p)) - W2(E(i, q + 1), E(i + 1, p - 1)), i, 0,
                p, q);
  } else if (tag == "1.3") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        for (int p = -w; p <= w; ++p)
          for (int q = -w; q <= w; ++q)
            check(W2(E(i, p), E(j, q)), W2(E(j, q), E(i, p)), i, j, p, q);
  } else if (tag == "2.1") {
    for (int i = 1; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(F(i, p), F(i, q)), -W2(F(i, q + 1), F(i, p - 1)), i, 0, p, q);
  } else if (tag == "2.2") {
    for (int i = 1; i <= n - 2; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(F(i, p), F(i + 1, q)),
                W2(F(i + 1, q), F(i, p)) - W2(F(i + 1, q - 1), F(i, p + 1)), i, 0,
                p, q);
  } else if (tag == "2.3") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        for (int p = -w; p <= w; ++p)
          for (int q = -w; q <= w; ++q)
            check(W2(F(i, p), F(j, q)), W2(F(j, q), F(i, p)), i, j, p, q);
  } else if (tag == "3.1") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (i == j) continue;
        for (int p = -w; p <= w; ++p)
          for (int q = -w; q <= w; ++q)
            check(W2(E(i, p), F(j, q)), W2(F(j, q), E(i, p)), i, j, p, q);
      }
  } else if (tag == "3.2") {
    for (int i = 1; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(E(i, p), F(i, q)) - W2(F(i, q), E(i, p)),
                W2(E(i, p + q), F(i, 0)) - W2(F(i, 0), E(i, p + q)), i, 0, p, q);
  } else if (tag == "4.1") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int p = -w; p <= w; ++p)
          for (int q = -w; q <= w; ++q)
            check(W2(H(i, p), H(j, q)), W2(H(j, q), H(i, p)), i, j, p, q);
  } else if (tag == "5.1") {
    if (n >= 2)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(n, p), E(n - 1, q)),
                W2(E(n - 1, q), H(n, p)) - W2(E(n - 1, q + 1), H(n, p - 1)), n - 1,
                0, p, q);
  } else if (tag == "5.1p") {
    for (int i = 2; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(i, p), E(i - 1, q)),
                W2(E(i - 1, q), H(i, p)) - W2(E(i - 1, q + 1), H(i, p - 1)), i, 0,
                p, q);
  } else if (tag == "5.1pp") {
    for (int i = 2; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(E(i, q), H(i - 1, p)),
                W2(H(i - 1, p), E(i, q)) - W2(H(i - 1, p + 1), E(i, q - 1)), i, 0,
                p, q);
  } else if (tag == "5.2") {
    for (int i = 1; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(i, p), E(i, q)), -W2(E(i, q - 1), H(i, p + 1)), i, 0, p, q);
  } else if (tag == "5.3") {
    for (int i = 1; i <= n - 2; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(n, p), E(i, q)), W2(E(i, q), H(n, p)), i, 0, p, q);
  } else if (tag == "5.3p") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        for (int p = -w; p <= w; ++p)
          for (int q = -w; q <= w; ++q)
            check(W2(H(i, p), E(j, q)), W2(E(j, q), H(i, p)), i, j, p, q);
      }
  } else if (tag == "6.1") {
    if (n >= 2)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(F(n - 1, p), H(n, q)),
                W2(H(n, q), F(n - 1, p)) - W2(H(n, q - 1), F(n - 1, p + 1)), n - 1,
                0, p, q);
  } else if (tag == "6.1p") {
    for (int i = 2; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(F(i - 1, p), H(i, q)),
                W2(H(i, q), F(i - 1, p)) - W2(H(i, q - 1), F(i - 1, p + 1)), i, 0,
                p, q);
  } else if (tag == "6.1pp") {
    for (int i = 2; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(i - 1, q), F(i, p)),
                W2(F(i, p), H(i - 1, q)) - W2(F(i, p - 1), H(i - 1, q + 1)), i, 0,
                p, q);
  } else if (tag == "6.2") {
    for (int i = 1; i <= n - 1; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(i, p), F(i, q)), -W2(F(i, q + 1), H(i, p - 1)), i, 0, p, q);
  } else if (tag == "6.3") {
    for (int i = 1; i <= n - 2; ++i)
      for (int p = -w; p <= w; ++p)
        for (int q = -w; q <= w; ++q)
          check(W2(H(n, p), F(i, q)), W2(F(i, q), H(n, p)), i, 0, p, q);
  } else if (tag == "6.3p") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        for (int p = -w; p <= w; ++p)
          for (int q = -w; q <= w; ++q)
            check(W2(H(i, p), F(j, q)), W2(F(j, q), H(i, p)), i, j, p, q);
      }
  } else if (tag == "plactic-a") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        check(W2(E(i, 0), E(j, 0)), W2(E(j, 0), E(i, 0)), i, j, 0, 0);
  } else if (tag == "plactic-b") {
    for (int i = 1; i <= n - 2; ++i)
      check(W3(E(i, 0), E(i, 0), E(i + 1, 0)), W3(E(i, 0), E(i + 1, 0), E(i, 0)),
            i, 0, 0, 0);
  } else if (tag == "plactic-c") {
    for (int i = 1; i <= n - 2; ++i)
      check(W3(E(i + 1, 0), E(i, 0), E(i + 1, 0)),
            W3(E(i, 0), E(i + 1, 0), E(i + 1, 0)), i, 0, 0, 0);
  } else {
    throw std::invalid_argument("unknown relation tag: " + tag);
  }

  return rep;
}

std::vector<Report> verify_all(int n, int d, int window) {
  std::vector<Report> out;
  for (const auto& tag : relation_tags()) {
    Report rep = verify_relation(tag, n, d, window);
    if (rep.instances > 0) out.push_back(rep);
  }
  return out;
}

std::vector<Report> verify_plactic(int n, int d) {
  std::vector<Report> out;
  for (const auto& tag : {"plactic-a", "plactic-b", "plactic-c"})
    out.push_back(verify_relation(tag, n, d, 0));
  return out;
}

Report verify_star_vs_op(int n, int d, int window) {
  Report rep;
  rep.tag = "star-vs-op";
  rep.n = n;
  rep.d = d;
  rep.window = window;

  std::vector<KClass> pool;
  for (const auto& nu : compositions(d, n))
    for (int k = 1; k <= n; ++k)
      for (int r = -window; r <= window; ++r) pool.push_back(local_H(nu, k, r));
  if (d >= 1)
    for (const auto& mu : compositions(d - 1, n))
      for (int k = 1; k <= n - 1; ++k)
        for (int p = -window; p <= window; ++p) {
          pool.push_back(local_E(mu, k, p));
          pool.push_back(local_F(mu, k, p));
        }

  std::map<Composition, std::vector<size_t>> by_row_margin;
  for (size_t t = 0; t < pool.size(); ++t)
    by_row_margin[margins(pool[t].support).first].push_back(t);

  std::map<Composition, std::vector<LaurentPoly>> bases;

  for (const auto& c1 : pool) {
    if (!rep.pass) break;
    auto [row1, col1] = margins(c1.support);
    auto bucket = by_row_margin.find(col1);
    if (bucket == by_row_margin.end()) continue;
    auto bit = bases.find(row1);
    if (bit == bases.end()) bit = bases.emplace(row1, schur_box_basis(row1)).first;

    for (size_t t2 : bucket->second) {
      const KClass& c2 = pool[t2];
      std::optional<KClass> st;
      try {
        st = star_local(c1, c2);
      } catch (const UncoveredCase&) {
        continue;
      }
      if (!st) continue;
      ++rep.instances;
      for (const auto& b : bit->second) {
        SymClass in{b, row1};
        SymClass via_star = act_kclass(*st, in);
        SymClass composed = act_kclass(c2, act_kclass(c1, in));
        if (!(via_star == composed)) {
          rep.pass = false;
          std::ostringstream os;
          os << "star-vs-op fails: supp1=" << c1.support.str()
             << " supp2=" << c2.support.str();
          rep.counterexample = os.str();
          break;
        }
      }
      if (!rep.pass) break;
    }
  }
  return rep;
}

// ----------------------------------------------------------------------
// Exact rational span
// ----------------------------------------------------------------------

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Row = std::map<ExpVec, Rational, GradedLexLess>;

Row to_row(const LaurentPoly& f) {
  Row r;
  for (const auto& [e, c] : f.terms()) r.emplace(e, Rational(c));
  return r;
}

struct Eliminator {
  // pivot monomial -> row normalized to pivot coefficient 1
  std::map<ExpVec, Row, GradedLexLess> basis;

  Row reduce(Row r) const {
    while (!r.empty()) {
      auto lead = std::prev(r.end());
      auto it = basis.find(lead->first);
      if (it == basis.end()) break;
      Rational c = lead->second;
      for (const auto& [m, v] : it->second) {
        auto jt = r.find(m);
        Rational nv = (jt == r.end() ? Rational(0) : jt->second) - c * v;
        if (nv == 0) {
          if (jt != r.end()) r.erase(jt);
        } else if (jt != r.end()) {
          jt->second = nv;
        } else {
          r.emplace(m, nv);
        }
      }
    }
    return r;
  }

  void add(const Row& row) {
    Row r = reduce(row);
    if (r.empty()) return;
    Rational c = std::prev(r.end())->second;
    for (auto& [m, v] : r) v /= c;
    ExpVec pivot = std::prev(r.end())->first;
    basis.emplace(std::move(pivot), std::move(r));
  }

  bool contains(const LaurentPoly& f) const { return reduce(to_row(f)).empty(); }
};

}  // namespace

GenerationReport generation_check(const Composition& mu, int deg) {
  const int n = static_cast<int>(mu.size());
  const int d = comp_total(mu);
  GenerationReport rep;
  rep.mu = mu;

  std::vector<LaurentPoly> targets;
  auto iv = block_intervals(mu);
  for (int b = 1; b <= n; ++b) {
    int sz = mu[static_cast<size_t>(b - 1)];
    if (sz == 0) continue;
    std::vector<int> vars;
    for (int t = iv[static_cast<size_t>(b - 1)].first;
         t <= iv[static_cast<size_t>(b - 1)].second; ++t)
      vars.push_back(t);
    for (int j = 1; j <= sz; ++j) targets.push_back(complete_h(j, vars, false, d));
    targets.push_back(elementary_e(sz, vars, true, d));
  }
  rep.targets = static_cast<int>(targets.size());
  if (targets.empty()) {
    rep.pass = true;
    return rep;
  }

  const int maxmu = *std::max_element(mu.begin(), mu.end());
  const int bound = deg + maxmu;
  std::vector<LaurentPoly> G;
  G.push_back(LaurentPoly::one(d));
  for (int k = 1; k <= n; ++k)
    for (int r = -bound; r <= bound; ++r) {
      LaurentPoly f = h_local_poly(mu, k, r);
      if (!f.is_zero()) G.push_back(f);
    }

  Eliminator elim;
  auto all_in = [&]() {
    return std::all_of(targets.begin(), targets.end(),
                       [&](const LaurentPoly& t) { return elim.contains(t); });
  };

  // Since G contains 1, length <= 2 products are the pair products.
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i; j < G.size(); ++j) elim.add(to_row(G[i] * G[j]));

  if (!all_in()) {
    bool done = false;
    for (size_t i = 0; i < G.size() && !done; ++i)
      for (size_t j = i; j < G.size() && !done; ++j) {
        LaurentPoly pij = G[i] * G[j];
        for (size_t l = j; l < G.size(); ++l) elim.add(to_row(pij * G[l]));
        if (all_in()) done = true;
      }
  }

  rep.generated = 0;
  for (const auto& t : targets)
    if (elim.contains(t)) ++rep.generated;
  rep.pass = (rep.generated == rep.targets);
  return rep;
}

WitnessReport witness_b(const Composition& mu) {
  const int n = static_cast<int>(mu.size());
  const int d = comp_total(mu);
  WitnessReport rep;
  rep.mu = mu;

  auto fail = [&](const Composition& nu, const std::string& what) {
    if (!rep.pass) return;
    rep.pass = false;
    rep.counterexample = "witness " + comp_str(mu) + " at component " +
                         comp_str(nu) + ": " + what;
  };

  for (const auto& nu : compositions(d, n)) {
    ++rep.components;
    LaurentPoly val = LaurentPoly::one(d);
    for (int k = 1; k <= n; ++k)
      val = val * h_local_poly(nu, k, -mu[static_cast<size_t>(k - 1)]);

    bool must_vanish = false;
    for (int k = 1; k <= n && !must_vanish; ++k) {
      if (nu[static_cast<size_t>(k - 1)] <= mu[static_cast<size_t>(k - 1)]) continue;
      if (mu[static_cast<size_t>(k - 1)] >= 1 ||
          (k < n && nu[static_cast<size_t>(k)] > 0))
        must_vanish = true;
    }
    if (must_vanish && !val.is_zero()) fail(nu, "expected zero");

    if (nu == mu) {
      bool consecutive_zero = false;
      for (int k = 1; k < n; ++k)
        if (mu[static_cast<size_t>(k - 1)] == 0 && mu[static_cast<size_t>(k)] == 0)
          consecutive_zero = true;
      bool nondegenerate = mu[static_cast<size_t>(n - 1)] > 0 && !consecutive_zero;
      LaurentPoly expected = LaurentPoly::zero(d);
      if (nondegenerate) {
        ExpVec e(static_cast<size_t>(d), -1);
        BigInt sign = (((d - n) % 2) + 2) % 2 == 0 ? 1 : -1;
        expected = LaurentPoly::monomial(d, e, sign);
      }
      if (val != expected) fail(nu, "diagonal value wrong");
    }
  }
  return rep;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.pass; });
}

}  // namespace affschur
