#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "affschur/cli.hpp"
#include "affschur/json_io.hpp"

namespace {

using affschur::CmdResult;
using affschur::Composition;
using affschur::OrbitMatrix;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Arguments that carry structured data accept either inline text or a file
// path.  Inline JSON is recognized by its first structural character; inline
// matrix/composition text consists only of digits, commas, semicolons, and
// whitespace.  Anything else is read as a file.
std::string load_text_arg(const std::string& arg) {
  if (arg.empty()) return arg;
  size_t i = arg.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) return arg;
  char c = arg[i];
  if (c == '[' || c == '{') return arg;
  bool plain = true;
  for (char ch : arg)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';' ||
          ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'))
      plain = false;
  if (plain) return arg;
  return slurp(arg);
}

OrbitMatrix load_matrix_arg(const std::string& arg) {
  std::string text = load_text_arg(arg);
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '[')
    return affschur::matrix_from_json(affschur::Json::parse(text));
  return affschur::parse_matrix_text(text);
}

Composition load_comp_arg(const std::string& arg) {
  std::string text = load_text_arg(arg);
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '[') {
    affschur::Json j = affschur::Json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("composition must be an array");
    Composition mu;
    for (const auto& e : j) {
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw std::invalid_argument("composition entries must be integers >= 0");
      mu.push_back(e.get<int>());
    }
    return mu;
  }
  return affschur::parse_composition_text(text);
}

int emit(const CmdResult& res, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write file '" << out_path << "'\n";
      return 2;
    }
    out << res.output;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for orbit matrices, their composition product, and "
               "the symmetric-function operator calculus built on them"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout")
      ->capture_default_str();

  int n = 2, d = 2, window = 2, q = 2;
  std::uint64_t seed = 0;
  bool as_json = false, dot = false;
  std::string left_arg, right_arg, factor_arg, mu_arg, nu_arg;
  std::string word_arg, input_arg, relation;

  // Let --out (held by the top-level app) appear after a subcommand name.
  app.fallthrough();
  auto* orbits = app.add_subcommand(
      "orbits", "list all orbit matrices for a given (n, d), grouped by margins");
  orbits->fallthrough();
  orbits->add_option("--n", n, "number of parts")->required();
  orbits->add_option("--d", d, "total size")->required();
  orbits->add_flag("--json", as_json, "emit JSON");

  auto* bruhat = app.add_subcommand(
      "bruhat", "compare two matrices in closure order, or sample a seeded "
                "random comparable pair from M_{mu,nu}");
  bruhat->fallthrough();
  bruhat->add_option("--left", left_arg, "matrix (inline '1,0;0,1', JSON, or file)");
  bruhat->add_option("--right", right_arg, "matrix (inline, JSON, or file)");
  bruhat->add_option("--mu", mu_arg, "row margin for random-pair mode");
  bruhat->add_option("--nu", nu_arg, "column margin for random-pair mode");
  bruhat->add_option("--seed", seed, "seed for random-pair mode")
      ->capture_default_str();
  bruhat->add_flag("--json", as_json, "emit JSON");

  auto* hasse = app.add_subcommand(
      "hasse", "cover-relation graph of M_{mu,nu} (text, JSON, or DOT)");
  hasse->fallthrough();
  hasse->add_option("--mu", mu_arg, "row margin, e.g. '1,1' or [1,1]")->required();
  hasse->add_option("--nu", nu_arg, "column margin")->required();
  hasse->add_flag("--dot", dot, "emit a DOT digraph");
  hasse->add_flag("--json", as_json, "emit JSON");

  auto* circ = app.add_subcommand(
      "circ", "composition product of two matrices, or the almost-diagonal "
              "factorization of one");
  circ->fallthrough();
  circ->add_option("--left", left_arg, "left factor (inline, JSON, or file)");
  circ->add_option("--right", right_arg, "right factor (inline, JSON, or file)");
  circ->add_option("--factor", factor_arg, "matrix to factor instead");
  std::optional<int> circ_q;
  circ->add_option("--q", circ_q, "cross-check against the finite-field oracle");
  circ->add_flag("--json", as_json, "emit JSON");

  auto* act = app.add_subcommand(
      "act", "apply a generator word to a function on components");
  act->fallthrough();
  act->add_option("--word", word_arg, "word JSON (inline or file)")->required();
  act->add_option("--input", input_arg, "input JSON (inline or file)")->required();

  auto* verify = app.add_subcommand(
      "verify", "check the relation catalog as exact operator identities");
  verify->fallthrough();
  verify->add_option("--n", n, "number of parts")->required();
  verify->add_option("--d", d, "total size")->required();
  verify->add_option("--window", window, "exponent window")->capture_default_str();
  verify->add_option("--relation", relation, "single relation tag, e.g. '1.2'");
  verify->add_flag("--json", as_json, "emit JSON");

  auto* oracle = app.add_subcommand(
      "oracle", "finite-field ground truth over F_q");
  oracle->fallthrough();
  oracle->require_subcommand(1);
  auto* ocirc = oracle->add_subcommand(
      "circ", "composition product computed from flags over F_q");
  ocirc->fallthrough();
  ocirc->add_option("--left", left_arg, "left factor")->required();
  ocirc->add_option("--right", right_arg, "right factor")->required();
  ocirc->add_option("--q", q, "field size")->capture_default_str();
  ocirc->add_flag("--json", as_json, "emit JSON");
  auto* oreal = oracle->add_subcommand(
      "realized", "relative positions realized by flag pairs over F_q");
  oreal->fallthrough();
  oreal->add_option("--mu", mu_arg, "row margin")->required();
  oreal->add_option("--nu", nu_arg, "column margin")->required();
  oreal->add_option("--q", q, "field size")->capture_default_str();
  oreal->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    CmdResult res{"", 2};
    if (*orbits) {
      res = affschur::cmd_orbits(n, d, as_json);
    } else if (*bruhat) {
      bool pair_mode = !left_arg.empty() || !right_arg.empty();
      bool random_mode = !mu_arg.empty() || !nu_arg.empty();
      if (pair_mode == random_mode) {
        std::cerr << "error: pass either --left/--right or --mu/--nu\n";
        return 2;
      }
      if (pair_mode) {
        if (left_arg.empty() || right_arg.empty()) {
          std::cerr << "error: --left and --right are both required\n";
          return 2;
        }
        res = affschur::cmd_bruhat(load_matrix_arg(left_arg),
                                   load_matrix_arg(right_arg), as_json);
      } else {
        if (mu_arg.empty() || nu_arg.empty()) {
          std::cerr << "error: --mu and --nu are both required\n";
          return 2;
        }
        res = affschur::cmd_bruhat_random(load_comp_arg(mu_arg),
                                          load_comp_arg(nu_arg), seed, as_json);
      }
    } else if (*hasse) {
      res = affschur::cmd_hasse(load_comp_arg(mu_arg), load_comp_arg(nu_arg), dot,
                                as_json);
    } else if (*circ) {
      bool factor_mode = !factor_arg.empty();
      bool product_mode = !left_arg.empty() || !right_arg.empty();
      if (factor_mode == product_mode) {
        std::cerr << "error: pass either --left/--right or --factor\n";
        return 2;
      }
      if (factor_mode) {
        res = affschur::cmd_circ_factor(load_matrix_arg(factor_arg), as_json);
      } else {
        if (left_arg.empty() || right_arg.empty()) {
          std::cerr << "error: --left and --right are both required\n";
          return 2;
        }
        res = affschur::cmd_circ(load_matrix_arg(left_arg),
                                 load_matrix_arg(right_arg), circ_q, as_json);
      }
    } else if (*act) {
      res = affschur::cmd_act(load_text_arg(word_arg), load_text_arg(input_arg));
    } else if (*verify) {
      res = affschur::cmd_verify(n, d, window, relation, as_json);
    } else if (*oracle) {
      if (*ocirc)
        res = affschur::cmd_oracle_circ(load_matrix_arg(left_arg),
                                        load_matrix_arg(right_arg), q, as_json);
      else if (*oreal)
        res = affschur::cmd_oracle_realized(load_comp_arg(mu_arg),
                                            load_comp_arg(nu_arg), q, as_json);
    }
    // Error text from a command goes to stderr; data goes to stdout/--out.
    if (res.exit_code == 2 && !res.output.empty()) {
      std::cerr << res.output;
      return 2;
    }
    return emit(res, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
