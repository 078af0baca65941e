#pragma once

// Independent brute-force oracle over small finite fields: enumerate
// flags, read off relative-position matrices, and compute composition
// products by scanning triples of flags.

#include <optional>
#include <set>
#include <vector>

#include "affschur/combinat.hpp"

namespace affschur {

// Dense matrix over F_q (q a small prime), entries in [0, q).
using FqMatrix = std::vector<std::vector<int>>;

int fq_rank(FqMatrix A, int q);

// Reduced row echelon form, zero rows dropped: the canonical basis of the
// row space.
FqMatrix fq_rref(FqMatrix A, int q);

// All k-dimensional subspaces of F_q^d, each as its canonical RREF basis.
std::vector<FqMatrix> all_subspaces(int d, int k, int q);

// A flag of type mu: bases of V_1 <= ... <= V_n with dim V_i = mu_1+...+mu_i
// (so V_n = F_q^d).
using FqFlag = std::vector<FqMatrix>;

std::vector<FqFlag> all_flags(const Composition& mu, int q);

// The coordinate flag of type mu.
FqFlag standard_flag(const Composition& mu);

int fq_intersection_dim(const FqMatrix& U, const FqMatrix& W, int q);

// Relative position of two complete chains: inclusion-exclusion of the
// pairwise intersection dimensions.
OrbitMatrix orbit_matrix_of_pair(const FqFlag& U, const FqFlag& W, int q);

// All relative positions of pairs (U, W) of types (mu, nu), computed from
// one fixed base flag of type mu.
std::set<OrbitMatrix> realized_matrices(const Composition& mu, const Composition& nu,
                                        int q);

// Brute-force composition product: the dominance-maximal relative position
// of (U, W) over all flag triples with matrix(U,V) = M and matrix(V,W) = N.
// nullopt iff the pair is not composable.  Throws std::runtime_error if
// more than `cap` flag pairs would be scanned, if no triple exists, or if
// no collected position dominates all others.
std::optional<OrbitMatrix> circ_oracle(const OrbitMatrix& M, const OrbitMatrix& N,
                                       int q, long cap = 1000000);

}  // namespace affschur
