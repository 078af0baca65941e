#pragma once

// Subcommand implementations, separated from argument parsing so they can
// be exercised directly by tests.  Each returns the finished output text
// (plain, JSON, or DOT) and the process exit code.

#include <cstdint>
#include <optional>
#include <string>

#include "affschur/combinat.hpp"

namespace affschur {

struct CmdResult {
  std::string output;
  int exit_code = 0;
};

// All matrices of total d with n rows and columns, grouped by margins.
CmdResult cmd_orbits(int n, int d, bool as_json);

// Closure-order comparison of two matrices, with a saturated chain when
// they are comparable.
CmdResult cmd_bruhat(const OrbitMatrix& a, const OrbitMatrix& b, bool as_json);

// Seeded random comparable pair from M_{mu,nu} and its saturated chain.
CmdResult cmd_bruhat_random(const Composition& mu, const Composition& nu,
                            std::uint64_t seed, bool as_json);

// The closure-order poset on M_{mu,nu}: nodes and cover edges, as text,
// JSON, or a DOT digraph.
CmdResult cmd_hasse(const Composition& mu, const Composition& nu, bool dot,
                    bool as_json);

// Composition product; optionally cross-checked against the finite-field
// oracle (exit 1 on disagreement).
CmdResult cmd_circ(const OrbitMatrix& left, const OrbitMatrix& right,
                   std::optional<int> q, bool as_json);

// Factorization into almost-diagonal factors.
CmdResult cmd_circ_factor(const OrbitMatrix& m, bool as_json);

// Apply a generator word (JSON text) to a function on components (JSON
// text); emits the resulting function as JSON.
CmdResult cmd_act(const std::string& word_json, const std::string& input_json);

// Relation verification; relation empty means the whole catalog.  Exit 0
// iff every checked relation passes.
CmdResult cmd_verify(int n, int d, int window, const std::string& relation,
                     bool as_json);

// Finite-field oracle for the composition product; exit 0 iff it agrees
// with the combinatorial product.
CmdResult cmd_oracle_circ(const OrbitMatrix& left, const OrbitMatrix& right, int q,
                          bool as_json);

// Realized relative positions over F_q vs the margin-constrained matrices;
// exit 0 iff the two sets are equal.
CmdResult cmd_oracle_realized(const Composition& mu, const Composition& nu, int q,
                              bool as_json);

}  // namespace affschur
