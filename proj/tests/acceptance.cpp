// Acceptance gate: one criterion per line, "PASS — <name>" or "FAIL — <name>",
// with measured wall time.  Exit status 0 iff every criterion passes.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "affschur/circ.hpp"
#include "affschur/combinat.hpp"
#include "affschur/kclasses.hpp"
#include "affschur/oracle.hpp"
#include "affschur/symfunc.hpp"
#include "affschur/verify.hpp"

using namespace affschur;

namespace {

struct Gate {
  bool all_ok = true;
  int done = 0;

  // body returns "" on success, a short detail string on failure.
  void run(const std::string& name, double budget_s,
           const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (detail.empty() && secs > budget_s) {
      std::ostringstream os;
      os << "time budget exceeded: " << secs << "s > " << budget_s << "s";
      detail = os.str();
    }
    bool ok = detail.empty();
    all_ok = all_ok && ok;
    ++done;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "PASS" : "FAIL") << " — " << name << " [" << secs << "s]";
    if (!ok) line << "  (" << detail << ")";
    std::cout << line.str() << "\n" << std::flush;
  }
};

std::string comp_str(const Composition& mu) {
  std::string s = "(";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu[i]);
  }
  return s + ")";
}

std::vector<int> upto(int d) {
  std::vector<int> v(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] = i + 1;
  return v;
}

OrbitMatrix mat(std::vector<std::vector<int>> rows) {
  OrbitMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      M.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return M;
}

// ---------------------------------------------------------------- criterion 1
std::string relation_suite() {
  const std::vector<std::pair<int, int>> scales{{2, 1}, {2, 2}, {2, 3},
                                                {3, 2}, {3, 3}, {4, 2}};
  for (auto [n, d] : scales) {
    auto reports = verify_all(n, d, 2);
    size_t expected = (n == 2) ? 8u : (n == 3) ? 19u : 24u;
    if (reports.size() != expected) {
      std::ostringstream os;
      os << "(" << n << "," << d << "): " << reports.size()
         << " applicable relation families, expected " << expected;
      return os.str();
    }
    for (const auto& r : reports) {
      if (!r.pass)
        return "(" + std::to_string(n) + "," + std::to_string(d) + ") relation " +
               r.tag + ": " + r.counterexample;
      if (r.instances <= 0)
        return "(" + std::to_string(n) + "," + std::to_string(d) + ") relation " +
               r.tag + ": no instances";
    }
  }
  return "";
}

// ---------------------------------------------------------------- criterion 2
std::string plactic_identities() {
  const std::vector<std::pair<int, int>> scales{{3, 2}, {3, 3}, {4, 2}};
  for (auto [n, d] : scales) {
    auto reports = verify_plactic(n, d);
    if (reports.size() != 3) return "expected three plactic reports";
    long covered = 0;
    for (const auto& r : reports) {
      if (!r.pass)
        return "(" + std::to_string(n) + "," + std::to_string(d) + ") " + r.tag +
               ": " + r.counterexample;
      covered += r.instances;
    }
    if (covered <= 0)
      return "(" + std::to_string(n) + "," + std::to_string(d) +
             "): no plactic instances";
  }
  return "";
}

// ---------------------------------------------------------------- criterion 3
std::string cartan_closed_forms() {
  const std::vector<std::pair<int, int>> scales{{2, 1}, {2, 2}, {3, 2}, {3, 3}};
  for (auto [n, d] : scales)
    for (int k = 1; k <= n - 1; ++k)
      for (int p = -3; p <= 3; ++p)
        for (int q = -3; q <= 3; ++q) {
          WordSum comm = word_sum(1, {gen_E(k, p), gen_F(k, q)}) -
                         word_sum(1, {gen_F(k, q), gen_E(k, p)});
          if (!op_equal(comm, word_sum(1, {gen_Hcf(k, p + q)}), n, d)) {
            std::ostringstream os;
            os << "commutator mismatch at n=" << n << " d=" << d << " k=" << k
               << " p=" << p << " q=" << q;
            return os.str();
          }
        }
  // Exact one-variable values of the closed-form symbol.
  for (int r = -6; r <= 6; ++r) {
    LaurentPoly xr = LaurentPoly::variable(1, 1, r);
    if (h_local_poly({1, 0}, 1, r) != xr)
      return "closed form at (1,0), r=" + std::to_string(r) + " is not +x^r";
    if (h_local_poly({0, 1}, 1, r) != -xr)
      return "closed form at (0,1), r=" + std::to_string(r) + " is not -x^r";
  }
  return "";
}

// ---------------------------------------------------------------- criterion 4
std::string product_vs_oracle() {
  const std::vector<std::pair<int, int>> scales{{2, 1}, {2, 2}, {2, 3},
                                                {3, 1}, {3, 2}};
  long checked = 0;
  for (auto [n, d] : scales) {
    auto comps = compositions(d, n);
    for (const auto& mu : comps)
      for (const auto& nu : comps)
        for (const auto& rho : comps)
          for (const auto& M : all_matrices(mu, nu))
            for (const auto& N : all_matrices(nu, rho)) {
              auto fast = circ(M, N);
              auto slow = circ_oracle(M, N, 2);
              ++checked;
              if (fast != slow)
                return "product disagrees with oracle at M=" + M.str() +
                       ", N=" + N.str();
            }
  }
  if (checked < 100) return "too few composable pairs checked";

  auto anti = mat({{0, 1}, {1, 0}});
  auto mm = circ(anti, anti);
  if (!mm || !(*mm == anti)) return "antidiagonal square is not idempotent";

  auto factors = factor(mat({{1, 1, 1}, {0, 1, 0}, {1, 0, 2}}));
  const std::vector<AlmostDiag> want{{'E', {2, 1, 3}, 1},
                                     {'E', {2, 1, 3}, 2},
                                     {'E', {1, 1, 4}, 1},
                                     {'F', {1, 2, 3}, 2},
                                     {'F', {1, 2, 3}, 1}};
  if (factors.size() != want.size())
    return "factor list has " + std::to_string(factors.size()) +
           " entries, expected 5";
  for (size_t t = 0; t < want.size(); ++t)
    if (factors[t].kind != want[t].kind || factors[t].base != want[t].base ||
        factors[t].k != want[t].k) {
      std::ostringstream os;
      os << "factor " << t + 1 << " is " << factors[t].kind << " "
         << comp_str(factors[t].base) << " k=" << factors[t].k;
      return os.str();
    }
  return "";
}

// ---------------------------------------------------------------- criterion 5
std::string cover_and_chains() {
  std::vector<std::pair<OrbitMatrix, OrbitMatrix>> comparable;  // strict pairs
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d) {
      auto comps = compositions(d, n);
      for (const auto& mu : comps)
        for (const auto& nu : comps) {
          auto tables = all_matrices(mu, nu);
          for (const auto& N : tables)
            for (const auto& M : tables) {
              if (N == M || !bruhat_leq(N, M)) continue;
              comparable.emplace_back(N, M);
              bool between = false;
              for (const auto& P : tables) {
                if (P == N || P == M) continue;
                if (bruhat_leq(N, P) && bruhat_leq(P, M)) {
                  between = true;
                  break;
                }
              }
              if (is_cover(N, M) == between)
                return "cover/transitive-reduction mismatch at N=" + N.str() +
                       ", M=" + M.str();
            }
        }
    }
  if (comparable.size() < 100) return "too few comparable pairs found";

  std::mt19937_64 rng(20260819);
  std::uniform_int_distribution<size_t> pick(0, comparable.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [N, M] = comparable[pick(rng)];
    auto chain = bruhat_chain(N, M);
    if (chain.size() < 2 || !(chain.front() == N) || !(chain.back() == M))
      return "chain endpoints wrong for N=" + N.str() + ", M=" + M.str();
    for (size_t t = 0; t + 1 < chain.size(); ++t)
      if (!is_cover(chain[t], chain[t + 1]))
        return "chain step " + std::to_string(t) + " is not a cover for N=" +
               N.str() + ", M=" + M.str();
  }
  return "";
}

// ---------------------------------------------------------------- criterion 6
std::string pushforward_calculus() {
  // (a) Dual internal routes on seeded random monomials across all two-block
  // shapes of total size up to 6 (any disagreement throws inside pushforward).
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> de(-4, 4);
  int monomials = 0;
  for (int d = 2; d <= 6; ++d)
    for (int a = 1; a <= d - 1; ++a) {
      Blocks shape{a, d - a};
      Blocks singles(static_cast<size_t>(d), 1);
      for (int trial = 0; trial < 14; ++trial) {
        ExpVec e(static_cast<size_t>(d));
        for (int& x : e) x = de(rng);
        LaurentPoly f =
            coset_symmetrize(LaurentPoly::monomial(d, e, BigInt(1)), singles, shape);
        auto r = pushforward(SymClass{f, shape}, 1);
        if (!is_block_symmetric(r.poly, r.blocks))
          return "push-forward result not block symmetric";
        ++monomials;
      }
    }
  if (monomials < 200) return "fewer than 200 random monomials driven";

  // (b) Case tables for a merged block of size L, singleton first and last.
  for (int L = 2; L <= 5; ++L) {
    auto vars = upto(L);
    for (int p = -6; p <= 6; ++p) {
      LaurentPoly got =
          pushforward(SymClass{LaurentPoly::variable(L, 1, p), {1, L - 1}}, 1).poly;
      LaurentPoly expect(L);
      if (p >= L) {
        expect = elementary_e(L, vars, false, L) * complete_h(p - L, vars, false, L);
        if ((L - 1) % 2) expect = -expect;
      } else if (p > 0) {
        // zero
      } else {
        expect = complete_h(-p, vars, true, L);
      }
      if (got != expect)
        return "singleton-first table fails at L=" + std::to_string(L) +
               ", p=" + std::to_string(p);

      LaurentPoly got2 =
          pushforward(SymClass{LaurentPoly::variable(L, L, p), {L - 1, 1}}, 1).poly;
      LaurentPoly expect2(L);
      if (p >= 0) {
        expect2 = complete_h(p, vars, false, L);
      } else if (p > -L) {
        // zero
      } else {
        expect2 = elementary_e(L, vars, true, L) * complete_h(-p - L, vars, true, L);
        if ((L - 1) % 2) expect2 = -expect2;
      }
      if (got2 != expect2)
        return "singleton-last table fails at L=" + std::to_string(L) +
               ", p=" + std::to_string(p);
    }
  }

  // (c) The push-forward of 1 is 1.
  for (Blocks b : {Blocks{1, 1}, Blocks{2, 1}, Blocks{2, 2}, Blocks{3, 2},
                   Blocks{0, 2}, Blocks{2, 0}, Blocks{1, 3}, Blocks{3, 3}}) {
    int d = blocks_total(b);
    if (pushforward(SymClass{LaurentPoly::one(d), b}, 1).poly != LaurentPoly::one(d))
      return "push-forward of 1 is not 1 at shape " + comp_str(b);
  }

  // (d) Projection formula: fully symmetric factors pull out.
  std::uniform_int_distribution<int> d2(-2, 2);
  LaurentPoly f = complete_h(2, upto(4), false, 4) +
                  elementary_e(3, upto(4), true, 4);
  for (int trial = 0; trial < 10; ++trial) {
    ExpVec e(4);
    for (int& x : e) x = d2(rng);
    LaurentPoly g = coset_symmetrize(LaurentPoly::monomial(4, e, BigInt(1)),
                                     {1, 1, 1, 1}, {2, 2});
    auto lhs = pushforward(SymClass{f * g, {2, 2}}, 1).poly;
    auto rhs = f * pushforward(SymClass{g, {2, 2}}, 1).poly;
    if (lhs != rhs) return "projection formula fails on trial " + std::to_string(trial);
  }
  return "";
}

// ---------------------------------------------------------------- criterion 7
std::string local_generation() {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d)
      for (const auto& mu : compositions(d, n)) {
        auto rep = generation_check(mu, 3);
        if (!rep.pass)
          return "generation fails at mu=" + comp_str(mu) + " (" +
                 std::to_string(rep.generated) + "/" +
                 std::to_string(rep.targets) + " targets)";
      }
  return "";
}

// ---------------------------------------------------------------- criterion 8
std::string witness_classes() {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& mu : compositions(d, n)) {
        auto rep = witness_b(mu);
        if (!rep.pass)
          return "witness fails at mu=" + comp_str(mu) + ": " + rep.counterexample;
      }
  return "";
}

}  // namespace

int main() {
  Gate gate;
  gate.run("relation suite at six scales (window 2)", 300.0, relation_suite);
  gate.run("plactic identities", 60.0, plactic_identities);
  gate.run("commutators against Cartan closed forms", 60.0, cartan_closed_forms);
  gate.run("composition product against the finite-field oracle", 120.0,
           product_vs_oracle);
  gate.run("cover relation, transitive reduction, saturated chains", 120.0,
           cover_and_chains);
  gate.run("push-forward calculus: dual routes, case tables, projection formula",
           60.0, pushforward_calculus);
  gate.run("local generation by Cartan polynomials", 60.0, local_generation);
  gate.run("witness classes", 60.0, witness_classes);

  std::cout << (gate.all_ok ? "ACCEPTANCE: all " : "ACCEPTANCE: FAILURES among ")
            << gate.done << " criteria" << (gate.all_ok ? " pass" : "") << "\n";
  return gate.all_ok ? 0 : 1;
}
