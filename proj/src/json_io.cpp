#include "affschur/json_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace affschur {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad("expected an integer at " + where);
  return j.get<int>();
}

std::vector<int> int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) bad("expected an array at " + where);
  std::vector<int> out;
  for (const auto& v : j) out.push_back(require_int(v, where));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_nonneg(const std::string& raw, const std::string& where) {
  size_t b = raw.find_first_not_of(" \t\r\n");
  size_t e = raw.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) bad("empty entry in " + where);
  std::string tok = raw.substr(b, e - b + 1);
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad("bad entry '" + tok + "' in " + where);
  return std::stoi(tok);
}

}  // namespace

Json matrix_to_json(const OrbitMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrbitMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix JSON must be a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix row must be an array");
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cols)
      bad("matrix rows have unequal lengths");
  }
  if (cols == 0) bad("matrix rows must be non-empty");
  OrbitMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) {
      int v = require_int(j[static_cast<size_t>(i)][static_cast<size_t>(c)],
                          "matrix entry");
      if (v < 0) bad("matrix entries must be non-negative");
      M.at(i, c) = v;
    }
  return M;
}

OrbitMatrix parse_matrix_text(const std::string& s) {
  auto rows = split(s, ';');
  int cols = -1;
  std::vector<std::vector<int>> vals;
  for (const auto& r : rows) {
    std::vector<int> row;
    for (const auto& tok : split(r, ','))
      row.push_back(parse_nonneg(tok, "matrix text '" + s + "'"));
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cols)
      bad("matrix text rows have unequal lengths: '" + s + "'");
    vals.push_back(std::move(row));
  }
  OrbitMatrix M(static_cast<int>(vals.size()), cols);
  for (int i = 0; i < M.rows; ++i)
    for (int c = 0; c < M.cols; ++c)
      M.at(i, c) = vals[static_cast<size_t>(i)][static_cast<size_t>(c)];
  return M;
}

Composition parse_composition_text(const std::string& s) {
  Composition mu;
  for (const auto& tok : split(s, ','))
    mu.push_back(parse_nonneg(tok, "composition text '" + s + "'"));
  return mu;
}

Json poly_to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["coeff"] = c.str();
    t["exp"] = e;
    terms.push_back(std::move(t));
  }
  Json out;
  out["nvars"] = f.nvars();
  out["terms"] = std::move(terms);
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    bad("polynomial JSON must have nvars and terms");
  int nvars = require_int(j["nvars"], "nvars");
  if (nvars < 0) bad("nvars must be non-negative");
  LaurentPoly f(nvars);
  if (!j["terms"].is_array()) bad("terms must be an array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
      bad("each term needs coeff and exp");
    BigInt c;
    if (t["coeff"].is_string()) {
      try {
        c = BigInt(t["coeff"].get<std::string>());
      } catch (const std::exception&) {
        bad("bad coefficient '" + t["coeff"].get<std::string>() + "'");
      }
    } else if (t["coeff"].is_number_integer()) {
      c = BigInt(t["coeff"].get<long long>());
    } else {
      bad("coeff must be a decimal string or integer");
    }
    ExpVec e = int_vector(t["exp"], "term exponent");
    if (static_cast<int>(e.size()) != nvars) bad("term exponent length != nvars");
    f.add_term(e, c);
  }
  return f;
}

Json symclass_to_json(const SymClass& c) {
  Json out = poly_to_json(c.poly);
  Json blocks = Json::array();
  for (const auto& [s, e] : block_intervals(c.blocks))
    blocks.push_back(Json::array({s, e}));
  out["blocks"] = std::move(blocks);
  return out;
}

SymClass symclass_from_json(const Json& j) {
  SymClass c;
  c.poly = poly_from_json(j);
  if (!j.contains("blocks") || !j["blocks"].is_array())
    bad("class JSON must have a blocks array");
  for (const auto& iv : j["blocks"]) {
    auto v = int_vector(iv, "block interval");
    if (v.size() != 2) bad("block interval must be [start, end]");
    int size = v[1] - v[0] + 1;
    if (size < 0) bad("block interval end < start - 1");
    c.blocks.push_back(size);
  }
  if (blocks_total(c.blocks) != c.poly.nvars())
    bad("block sizes must cover all variables");
  return c;
}

Json kclass_to_json(const KClass& c) {
  Json out;
  out["matrix"] = matrix_to_json(c.support);
  out["class"] = symclass_to_json(c.value);
  return out;
}

KClass kclass_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("class"))
    bad("KClass JSON must have matrix and class");
  KClass c{matrix_from_json(j["matrix"]), symclass_from_json(j["class"])};
  if (c.value.blocks != cell_blocks(c.support))
    bad("class blocks must equal the support's nonzero cell sizes");
  return c;
}

namespace {

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::E:
      return "E";
    case GenKind::F:
      return "F";
    case GenKind::H:
      return "H";
    case GenKind::Hcf:
      return "Hcf";
  }
  return "?";
}

GenKind kind_from_name(const std::string& s) {
  if (s == "E") return GenKind::E;
  if (s == "F") return GenKind::F;
  if (s == "H") return GenKind::H;
  if (s == "Hcf") return GenKind::Hcf;
  bad("unknown generator kind '" + s + "' (expected E, F, H, or Hcf)");
}

}  // namespace

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& g : w) {
    Json e;
    e["kind"] = kind_name(g.kind);
    e["k"] = g.k;
    e["p"] = g.p;
    out.push_back(std::move(e));
  }
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) bad("word JSON must be an array of generator records");
  Word w;
  for (const auto& e : j) {
    if (!e.is_object()) bad("word entry must be an object");
    if (e.contains("mu"))
      bad("word entries carrying 'mu' denote local classes and are not "
          "accepted here; use global symbols {kind, k, p}");
    for (const auto& [key, val] : e.items()) {
      (void)val;
      if (key != "kind" && key != "k" && key != "p")
        bad("unexpected key '" + key + "' in word entry");
    }
    if (!e.contains("kind") || !e.contains("k") || !e.contains("p"))
      bad("word entry needs kind, k, p");
    GenSymbol g;
    g.kind = kind_from_name(e["kind"].get<std::string>());
    g.k = require_int(e["k"], "word entry k");
    g.p = require_int(e["p"], "word entry p");
    if (g.k < 1) bad("word entry k must be >= 1");
    w.push_back(g);
  }
  return w;
}

Json flagfun_to_json(const FlagFun& f) {
  Json out = Json::array();
  for (const auto& [nu, cls] : f) {
    Json e;
    e["component"] = nu;
    e["class"] = symclass_to_json(cls);
    out.push_back(std::move(e));
  }
  return out;
}

FlagFun flagfun_from_json(const Json& j) {
  if (!j.is_array()) bad("input must be an array of {component, class} records");
  FlagFun f;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("component") || !e.contains("class"))
      bad("each record needs component and class");
    Composition nu = int_vector(e["component"], "component");
    for (int v : nu)
      if (v < 0) bad("component entries must be non-negative");
    SymClass cls = symclass_from_json(e["class"]);
    if (cls.blocks != nu) bad("class blocks must equal the component");
    if (f.count(nu)) bad("duplicate component in input");
    if (!cls.poly.is_zero()) f.emplace(std::move(nu), std::move(cls));
  }
  return f;
}

Json almost_diag_to_json(const AlmostDiag& D) {
  Json out;
  out["kind"] = std::string(1, D.kind);
  out["base"] = D.base;
  out["k"] = D.k;
  return out;
}

Json report_to_json(const Report& r) {
  Json out;
  out["tag"] = r.tag;
  out["n"] = r.n;
  out["d"] = r.d;
  out["window"] = r.window;
  out["instances"] = r.instances;
  out["pass"] = r.pass;
  out["counterexample"] = r.counterexample;
  return out;
}

}  // namespace affschur
