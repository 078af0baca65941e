#pragma once
//
// The circle product on orbit matrices.
//
// Almost-diagonal matrices E(mu,k) = Diag(mu) + E_{k,k+1} and
// F(mu,k) = Diag(mu) + E_{k+1,k} generate all orbit matrices under the
// product M o N (defined when C^M = R^N): composing through an
// almost-diagonal moves one unit between adjacent rows of the other
// factor, at an extreme column.  General products are evaluated by
// factoring the left factor into almost-diagonals; each factorization
// step strictly decreases the diagonal-distance norm DN.
//
#include <optional>
#include <vector>

#include "affschur/combinat.hpp"

namespace affschur {

struct AlmostDiag {
  char kind = 'E';   // 'E' or 'F'
  Composition base;  // diagonal entries mu
  int k = 1;         // 1-based step index, 1 <= k <= n-1

  OrbitMatrix materialize() const;
  Composition row_margin() const;  // mu + e_k (E) or mu + e_{k+1} (F)
  Composition col_margin() const;  // mu + e_{k+1} (E) or mu + e_k (F)
};

bool operator==(const AlmostDiag& x, const AlmostDiag& y);

// D o M for an almost-diagonal D; None when C^D != R^M.
// E(mu,k) o M = M - E_{k+1,m} + E_{k,m} with m the largest column where
// row k+1 of M is nonzero; F(mu,k) o M = M - E_{k,m} + E_{k+1,m} with m
// the smallest column where row k of M is nonzero.
std::optional<OrbitMatrix> circ_almost_diag(const AlmostDiag& D, const OrbitMatrix& M);

// The minimal S (in the closure order) with D o S = M, when one exists.
std::optional<OrbitMatrix> min_divisor(const OrbitMatrix& M, const AlmostDiag& D);

// One factorization step: M = D o N with DN(N) = DN(M) - 1, N minimal for
// its divisor class.  None iff M is diagonal.
std::optional<std::pair<AlmostDiag, OrbitMatrix>> strict_factor_step(const OrbitMatrix& M);

// Full factorization M = D_1 o D_2 o ... o D_t o Diag(C^M); t = DN(M).
std::vector<AlmostDiag> factor(const OrbitMatrix& M);

// General product; None when C^M != R^N.
std::optional<OrbitMatrix> circ(const OrbitMatrix& M, const OrbitMatrix& N);

}  // namespace affschur
