#pragma once
//
// Exact symmetric Laurent-polynomial calculus.
//
// Classes on a partial flag variety are modeled, at a fixed point, as
// Laurent polynomials in d variables with arbitrary-precision integer
// coefficients, symmetric within the blocks of a block structure.  The
// module provides generalized Schur functions s_lambda for arbitrary
// integer vectors lambda (straightening), coset symmetrization, and the
// push-forward / pull-back calculus along merges of adjacent blocks.
// Push-forwards are computed by two independent routes (shuffle
// symmetrization with exact denominator clearing, and a composition of
// Demazure-type single merges) which are asserted to agree.
//
#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affschur {

using BigInt = boost::multiprecision::cpp_int;
using ExpVec = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly one(int nvars);
  static LaurentPoly monomial(int nvars, const ExpVec& e, const BigInt& c = 1);
  // x_i^exp for the 1-based variable position i.
  static LaurentPoly variable(int nvars, int i, int exp = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpVec, BigInt, GradedLexLess>& terms() const { return terms_; }
  void add_term(const ExpVec& e, const BigInt& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const BigInt& c) const;
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Rename variables: variable at 0-based position i becomes position
  // perm[i]; perm is a bijection on {0,..,nvars-1}.
  LaurentPoly permuted(const std::vector<int>& perm) const;
  // Swap variables at 1-based positions i and j.
  LaurentPoly swapped(int i, int j) const;
  // Multiply by the monomial x^delta.
  LaurentPoly shifted(const ExpVec& delta) const;
  // Smallest exponent of any of the given 1-based variables over all terms
  // (0 for the zero polynomial).
  int min_exponent(const std::vector<int>& vars) const;

  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<ExpVec, BigInt, GradedLexLess> terms_;
};

// Complete homogeneous / elementary symmetric polynomials of the variables
// at the given 1-based positions (or their reciprocals), inside an ambient
// ring with nvars variables.  h_0 = e_0 = 1; e_k = 0 for k > |vars|.
LaurentPoly complete_h(int k, const std::vector<int>& vars, bool inverse, int nvars);
LaurentPoly elementary_e(int k, const std::vector<int>& vars, bool inverse, int nvars);

// Exact division f / (x_a - x_b) for 1-based positions a != b; throws
// std::logic_error if the division leaves a remainder.
LaurentPoly divide_linear_exact(const LaurentPoly& f, int a, int b);

// Straightening data: s_lambda = sign * s_partition * (y_1...y_m)^{-shift}.
struct Straightened {
  int sign = 1;
  std::vector<int> partition;
  int shift = 0;
};
// None iff s_lambda = 0 (repeated entries in lambda + rho).  lambda is
// padded with zeros to length m.
std::optional<Straightened> straighten(std::vector<int> lam, int m);

// Generalized Schur Laurent polynomial s_lambda of the variables at the
// given positions; computed by the alternant with exact Vandermonde
// division and, independently, by straightening plus Jacobi-Trudi; the two
// must agree.
LaurentPoly schur_general(std::vector<int> lam, const std::vector<int>& vars, int nvars);

// Block structure: consecutive block sizes (zeros allowed), covering
// {1,...,d} in order.
using Blocks = std::vector<int>;

// 1-based inclusive intervals [start, end]; an empty block at offset s
// yields [s, s-1].
std::vector<std::pair<int, int>> block_intervals(const Blocks& blocks);
int blocks_total(const Blocks& blocks);
bool is_block_symmetric(const LaurentPoly& f, const Blocks& blocks);

struct SymClass {
  LaurentPoly poly;
  Blocks blocks;
  bool operator==(const SymClass& o) const { return poly == o.poly && blocks == o.blocks; }
  bool operator!=(const SymClass& o) const { return !(*this == o); }
};

// Does `fine` refine `coarse` (consecutive runs of fine blocks summing to
// each coarse block)?  Zero-size blocks may appear in either.
bool refines(const Blocks& fine, const Blocks& coarse);

// Orbit sum of f over the minimal-length representatives of the cosets of
// the fine symmetric group inside the coarse one.  Pre: fine refines
// coarse, f fine-symmetric.  Result is coarse-symmetric.
LaurentPoly coset_symmetrize(const LaurentPoly& f, const Blocks& fine, const Blocks& coarse);

// Demazure-type single merge D_i(f) = (x_{i+1} f - x_i (s_i f)) / (x_{i+1} - x_i)
// for 1-based position i: the push-forward merging singleton blocks i, i+1.
LaurentPoly demazure_merge(const LaurentPoly& f, int i);

// Push-forward along the merge of adjacent blocks l, l+1 (1-based block
// indices); computed by both routes, asserted equal.
SymClass pushforward(const SymClass& f, int l);

// Pull-back along the refinement map: same polynomial, finer blocks.
SymClass pullback(const SymClass& f, const Blocks& finer);

}  // namespace affschur
