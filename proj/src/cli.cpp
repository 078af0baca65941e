#include "affschur/cli.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "affschur/circ.hpp"
#include "affschur/json_io.hpp"
#include "affschur/oracle.hpp"
#include "affschur/verify.hpp"

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

CmdResult usage_error(const std::string& what) { return {"error: " + what + "\n", 2}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

CmdResult cmd_orbits(int n, int d, bool as_json) {
  if (n < 1) return usage_error("--n must be >= 1");
  if (d < 0) return usage_error("--d must be >= 0");
  auto comps = compositions(d, n);
  if (comps.size() > 300)
    return usage_error("size guard: too many margins at this (n, d)");

  long pairs = 0, total = 0;
  Json groups = Json::array();
  std::ostringstream text;
  for (const auto& mu : comps)
    for (const auto& nu : comps) {
      auto tables = all_matrices(mu, nu);
      ++pairs;
      total += static_cast<long>(tables.size());
      if (total > 100000)
        return usage_error("size guard: too many matrices at this (n, d)");
      if (as_json) {
        Json g;
        g["row_margin"] = mu;
        g["col_margin"] = nu;
        Json ms = Json::array();
        for (const auto& M : tables) {
          auto cl = classify(M);
          Json e;
          e["matrix"] = matrix_to_json(M);
          e["dim"] = orbit_dim(M);
          e["closed"] = cl.closed;
          e["open"] = cl.open;
          ms.push_back(std::move(e));
        }
        g["matrices"] = std::move(ms);
        groups.push_back(std::move(g));
      } else {
        text << "R=" << comp_str(mu) << " C=" << comp_str(nu) << "\n";
        for (const auto& M : tables) {
          auto cl = classify(M);
          text << "  " << M.str() << "  dim=" << orbit_dim(M);
          if (cl.closed) text << " closed";
          if (cl.open) text << " open";
          text << "\n";
        }
      }
    }

  if (as_json) {
    Json out;
    out["n"] = n;
    out["d"] = d;
    out["margin_pairs"] = pairs;
    out["matrices"] = total;
    out["groups"] = std::move(groups);
    return {dump(out), 0};
  }
  text << "margin pairs: " << pairs << ", matrices: " << total << "\n";
  return {text.str(), 0};
}

namespace {

CmdResult bruhat_result(const OrbitMatrix& a, const OrbitMatrix& b, bool as_json,
                        const char* note) {
  auto [ra, ca] = margins(a);
  auto [rb, cb] = margins(b);
  bool same = (ra == rb && ca == cb);
  bool leq_ab = same && bruhat_leq(a, b);
  bool leq_ba = same && bruhat_leq(b, a);
  std::vector<OrbitMatrix> chain;
  if (leq_ab)
    chain = bruhat_chain(a, b);
  else if (leq_ba)
    chain = bruhat_chain(b, a);
  bool saturated = true;
  for (size_t t = 0; t + 1 < chain.size(); ++t)
    if (!is_cover(chain[t], chain[t + 1])) saturated = false;

  if (as_json) {
    Json out;
    if (note[0]) out["note"] = note;
    out["a"] = matrix_to_json(a);
    out["b"] = matrix_to_json(b);
    out["same_margins"] = same;
    out["leq_ab"] = leq_ab;
    out["leq_ba"] = leq_ba;
    out["b_covers_a"] = same && is_cover(a, b);
    out["a_covers_b"] = same && is_cover(b, a);
    Json ch = Json::array();
    for (const auto& M : chain) ch.push_back(matrix_to_json(M));
    out["chain"] = std::move(ch);
    out["chain_saturated"] = saturated;
    return {dump(out), 0};
  }
  std::ostringstream text;
  if (note[0]) text << note << "\n";
  text << "a = " << a.str() << "\n";
  text << "b = " << b.str() << "\n";
  if (!same) {
    text << "incomparable (different margins)\n";
    return {text.str(), 0};
  }
  text << "a <= b: " << (leq_ab ? "yes" : "no") << "\n";
  text << "b <= a: " << (leq_ba ? "yes" : "no") << "\n";
  text << "b covers a: " << (is_cover(a, b) ? "yes" : "no") << "\n";
  if (!chain.empty()) {
    text << "saturated chain (" << chain.size() - 1 << " covers):\n";
    for (const auto& M : chain) text << "  " << M.str() << "\n";
  }
  return {text.str(), 0};
}

}  // namespace

CmdResult cmd_bruhat(const OrbitMatrix& a, const OrbitMatrix& b, bool as_json) {
  return bruhat_result(a, b, as_json, "");
}

CmdResult cmd_bruhat_random(const Composition& mu, const Composition& nu,
                            std::uint64_t seed, bool as_json) {
  if (mu.size() != nu.size() || comp_total(mu) != comp_total(nu))
    return usage_error("--mu and --nu must have equal length and total");
  auto tables = all_matrices(mu, nu);
  if (tables.empty()) return usage_error("no matrices with these margins");
  if (tables.size() > 20000) return usage_error("size guard: too many matrices");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, tables.size() - 1);
  size_t lo = 0, hi = 0;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (bruhat_leq(tables[i], tables[j])) {
      lo = i;
      hi = j;
      break;
    }
    if (bruhat_leq(tables[j], tables[i])) {
      lo = j;
      hi = i;
      break;
    }
  }
  std::string note = "seeded random comparable pair (seed " + std::to_string(seed) + ")";
  return bruhat_result(tables[lo], tables[hi], as_json, note.c_str());
}

CmdResult cmd_hasse(const Composition& mu, const Composition& nu, bool dot,
                    bool as_json) {
  if (mu.size() != nu.size() || comp_total(mu) != comp_total(nu))
    return usage_error("--mu and --nu must have equal length and total");
  auto tables = all_matrices(mu, nu);
  if (tables.size() > 5000) return usage_error("size guard: too many matrices");

  std::map<OrbitMatrix, int> index;
  for (size_t t = 0; t < tables.size(); ++t)
    index.emplace(tables[t], static_cast<int>(t));

  std::vector<std::pair<int, int>> edges;  // (lower, upper)
  for (size_t t = 0; t < tables.size(); ++t)
    for (const auto& N : covers_below(tables[t]))
      edges.emplace_back(index.at(N), static_cast<int>(t));

  if (dot) {
    std::ostringstream text;
    text << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& M : tables)
      text << "  \"" << M.str() << "\" [label=\"" << M.str() << "\"];\n";
    for (const auto& [lo, hi] : edges)
      text << "  \"" << tables[static_cast<size_t>(lo)].str() << "\" -> \""
           << tables[static_cast<size_t>(hi)].str() << "\";\n";
    text << "}\n";
    return {text.str(), 0};
  }
  if (as_json) {
    Json out;
    out["row_margin"] = mu;
    out["col_margin"] = nu;
    Json nodes = Json::array();
    for (const auto& M : tables) {
      Json e;
      e["matrix"] = matrix_to_json(M);
      e["dim"] = orbit_dim(M);
      nodes.push_back(std::move(e));
    }
    out["nodes"] = std::move(nodes);
    Json ej = Json::array();
    for (const auto& [lo, hi] : edges) ej.push_back(Json::array({lo, hi}));
    out["edges"] = std::move(ej);
    return {dump(out), 0};
  }
  std::ostringstream text;
  text << "nodes: " << tables.size() << "\nedges: " << edges.size() << "\n";
  for (const auto& [lo, hi] : edges)
    text << "  " << tables[static_cast<size_t>(lo)].str() << " -> "
         << tables[static_cast<size_t>(hi)].str() << "\n";
  return {text.str(), 0};
}

CmdResult cmd_circ(const OrbitMatrix& left, const OrbitMatrix& right,
                   std::optional<int> q, bool as_json) {
  auto product = circ(left, right);
  bool agrees = true;
  std::string oracle_err;
  if (q) {
    try {
      auto slow = circ_oracle(left, right, *q);
      agrees = (product == slow);
    } catch (const std::runtime_error& e) {
      agrees = false;
      oracle_err = e.what();
    }
  }

  if (as_json) {
    Json out;
    out["product"] = product ? matrix_to_json(*product) : Json(nullptr);
    if (q) {
      Json o;
      o["q"] = *q;
      o["agrees"] = agrees;
      if (!oracle_err.empty()) o["error"] = oracle_err;
      out["oracle"] = std::move(o);
    }
    return {dump(out), agrees ? 0 : 1};
  }
  std::ostringstream text;
  text << (product ? product->str() : std::string("zero")) << "\n";
  if (q) {
    text << "oracle (q=" << *q << "): " << (agrees ? "agrees" : "DISAGREES");
    if (!oracle_err.empty()) text << " (" << oracle_err << ")";
    text << "\n";
  }
  return {text.str(), agrees ? 0 : 1};
}

CmdResult cmd_circ_factor(const OrbitMatrix& m, bool as_json) {
  auto factors = factor(m);
  if (as_json) {
    Json out;
    Json fs = Json::array();
    for (const auto& D : factors) fs.push_back(almost_diag_to_json(D));
    out["factors"] = std::move(fs);
    out["count"] = factors.size();
    out["diagonal"] = matrix_to_json(OrbitMatrix::diag(margins(m).second));
    return {dump(out), 0};
  }
  std::ostringstream text;
  for (const auto& D : factors)
    text << D.kind << " base=" << comp_str(D.base) << " k=" << D.k << "\n";
  text << "factors: " << factors.size() << ", diagonal: "
       << OrbitMatrix::diag(margins(m).second).str() << "\n";
  return {text.str(), 0};
}

CmdResult cmd_act(const std::string& word_json, const std::string& input_json) {
  Json wj, ij;
  try {
    wj = Json::parse(word_json);
  } catch (const Json::parse_error& e) {
    return usage_error(std::string("malformed word JSON: ") + e.what());
  }
  try {
    ij = Json::parse(input_json);
  } catch (const Json::parse_error& e) {
    return usage_error(std::string("malformed input JSON: ") + e.what());
  }
  Word w;
  FlagFun fun;
  try {
    w = word_from_json(wj);
    fun = flagfun_from_json(ij);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  if (fun.empty()) return {dump(Json::array()), 0};

  const int n = static_cast<int>(fun.begin()->first.size());
  const int d = comp_total(fun.begin()->first);
  for (const auto& [nu, cls] : fun) {
    (void)cls;
    if (static_cast<int>(nu.size()) != n || comp_total(nu) != d)
      return usage_error("all components must have the same length and total");
  }
  for (const auto& g : w) {
    int maxk = (g.kind == GenKind::E || g.kind == GenKind::F) ? n - 1 : n;
    if (g.k > maxk)
      return usage_error("generator index k out of range for these components");
  }
  FlagFun result = apply_word(w, fun, n);
  return {dump(flagfun_to_json(result)), 0};
}

CmdResult cmd_verify(int n, int d, int window, const std::string& relation,
                     bool as_json) {
  if (n < 1) return usage_error("--n must be >= 1");
  if (d < 0) return usage_error("--d must be >= 0");
  if (window < 0) return usage_error("--window must be >= 0");
  std::vector<Report> reports;
  if (relation.empty()) {
    reports = verify_all(n, d, window);
  } else {
    auto tags = relation_tags();
    bool known = false;
    for (const auto& t : tags) known = known || (t == relation);
    if (!known) return usage_error("unknown relation tag '" + relation + "'");
    reports.push_back(verify_relation(relation, n, d, window));
  }

  bool ok = all_pass(reports);
  if (as_json) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    return {dump(out), ok ? 0 : 1};
  }
  std::ostringstream text;
  int failures = 0;
  for (const auto& r : reports) {
    text << (r.pass ? "PASS" : "FAIL") << " " << r.tag
         << " instances=" << r.instances;
    if (!r.pass) {
      text << " — " << r.counterexample;
      ++failures;
    }
    text << "\n";
  }
  if (failures == 0)
    text << "all " << reports.size() << " relation families pass\n";
  else
    text << failures << " of " << reports.size() << " relation families FAIL\n";
  return {text.str(), ok ? 0 : 1};
}

CmdResult cmd_oracle_circ(const OrbitMatrix& left, const OrbitMatrix& right, int q,
                          bool as_json) {
  std::optional<OrbitMatrix> slow;
  std::string oracle_err;
  bool threw = false;
  try {
    slow = circ_oracle(left, right, q);
  } catch (const std::runtime_error& e) {
    threw = true;
    oracle_err = e.what();
  }
  auto fast = circ(left, right);
  bool agrees = !threw && (slow == fast);

  if (as_json) {
    Json out;
    out["q"] = q;
    out["product"] = (!threw && slow) ? matrix_to_json(*slow) : Json(nullptr);
    out["combinatorial"] = fast ? matrix_to_json(*fast) : Json(nullptr);
    out["agrees"] = agrees;
    if (threw) out["error"] = oracle_err;
    return {dump(out), agrees ? 0 : 1};
  }
  std::ostringstream text;
  if (threw)
    text << "oracle error: " << oracle_err << "\n";
  else
    text << (slow ? slow->str() : std::string("zero")) << "\n";
  text << "combinatorial product " << (agrees ? "agrees" : "DISAGREES") << "\n";
  return {text.str(), agrees ? 0 : 1};
}

CmdResult cmd_oracle_realized(const Composition& mu, const Composition& nu, int q,
                              bool as_json) {
  if (mu.size() != nu.size() || comp_total(mu) != comp_total(nu))
    return usage_error("--mu and --nu must have equal length and total");
  int d = comp_total(mu);
  if ((q == 2 && d > 5) || (q == 3 && d > 4) || q < 2 || q > 3)
    return usage_error("size guard: q must be 2 (d <= 5) or 3 (d <= 4)");

  auto realized = realized_matrices(mu, nu, q);
  auto tables = all_matrices(mu, nu);
  std::set<OrbitMatrix> expected(tables.begin(), tables.end());
  bool equal = (realized == expected);

  if (as_json) {
    Json out;
    out["q"] = q;
    out["row_margin"] = mu;
    out["col_margin"] = nu;
    out["realized"] = realized.size();
    out["expected"] = expected.size();
    out["equal"] = equal;
    Json ms = Json::array();
    for (const auto& M : realized) ms.push_back(matrix_to_json(M));
    out["matrices"] = std::move(ms);
    return {dump(out), equal ? 0 : 1};
  }
  std::ostringstream text;
  text << "realized: " << realized.size() << ", margin-constrained: "
       << expected.size() << ", equal: " << (equal ? "yes" : "NO") << "\n";
  for (const auto& M : realized) text << "  " << M.str() << "\n";
  return {text.str(), equal ? 0 : 1};
}

}  // namespace affschur
