#pragma once

// K-theoretic model: components indexed by compositions, values given by
// block-symmetric Laurent polynomials; generator actions, local classes on
// orbit matrices, and the local convolution product on covered patterns.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affschur/combinat.hpp"
#include "affschur/symfunc.hpp"

namespace affschur {

// ----------------------------------------------------------------------
// Generator symbols and words
// ----------------------------------------------------------------------

enum class GenKind {
  E,    // raising generator at step k (1 <= k <= n-1)
  F,    // lowering generator at step k (1 <= k <= n-1)
  H,    // Cartan-type generator: primitive at k = n, defined as the
        // commutator [E_k, F_k] for k < n (expanded when applied)
  Hcf,  // closed-form Cartan symbol at any k: multiplies each component
        // nu by the explicit polynomial h_local_poly(nu, k, p)
};

struct GenSymbol {
  GenKind kind = GenKind::E;
  int k = 1;  // step index, 1-based
  int p = 0;  // exponent / degree parameter
};

GenSymbol gen_E(int k, int p);
GenSymbol gen_F(int k, int p);
GenSymbol gen_H(int k, int p);
GenSymbol gen_Hcf(int k, int p);

// A word acts left-to-right: the word {g1, g2} denotes the product
// g1 * g2, whose operator applies g1 first.
using Word = std::vector<GenSymbol>;

struct WTerm {
  long long coeff = 1;
  Word word;
};
using WordSum = std::vector<WTerm>;

WordSum word_sum(long long c, Word w);
WordSum operator+(const WordSum& a, const WordSum& b);
WordSum operator-(const WordSum& a);
WordSum operator-(const WordSum& a, const WordSum& b);

// ----------------------------------------------------------------------
// Functions on components
// ----------------------------------------------------------------------

// Finitely supported map: component (composition of d with n parts) ->
// block-symmetric class whose blocks equal that component.  Zero values
// are never stored.
using FlagFun = std::map<Composition, SymClass>;

void flagfun_add(FlagFun& acc, const Composition& nu, const LaurentPoly& poly,
                 long long coeff = 1);
bool flagfun_equal(const FlagFun& a, const FlagFun& b);

// ----------------------------------------------------------------------
// Cartan polynomials
// ----------------------------------------------------------------------

// The explicit Laurent polynomial by which the k-th Cartan generator of
// degree r acts on the component mu (|mu| variables, blocks mu).
// For k < n it is supported on blocks k, k+1; for k = n on block n alone.
LaurentPoly h_local_poly(const Composition& mu, int k, int r);

// ----------------------------------------------------------------------
// Generator action
// ----------------------------------------------------------------------

// Apply one generator to a function on components.
FlagFun apply_gen(const GenSymbol& g, const FlagFun& psi, int n);

// Apply a word (leftmost letter first), expanding H letters with k < n
// into their commutator definition.
FlagFun apply_word(const Word& w, const FlagFun& psi, int n);
FlagFun apply_wordsum(const WordSum& ws, const FlagFun& psi, int n);

// ----------------------------------------------------------------------
// Operator equality on box bases
// ----------------------------------------------------------------------

// All partitions fitting in an a x c box (at most a parts, parts <= c),
// including the empty partition.
std::vector<std::vector<int>> partitions_in_box(int a, int c);

// Basis of the component mu over the symmetric Laurent ring: products of
// Schur polynomials s_{lambda^{(b)}}(X_b) with lambda^{(b)} inside the
// mu_b x (d - d_b(mu)) box.
std::vector<LaurentPoly> schur_box_basis(const Composition& mu);

// Exact operator equality: equal actions on every box-basis element of
// every component of total d with n parts.
bool op_equal(const WordSum& lhs, const WordSum& rhs, int n, int d);

// ----------------------------------------------------------------------
// Local classes on orbit matrices
// ----------------------------------------------------------------------

// A class supported on one orbit matrix: a Laurent polynomial in one
// variable per matrix entry unit, symmetric within each cell, cells
// ordered row-major.
struct KClass {
  OrbitMatrix support;
  SymClass value;  // blocks = sizes of the nonzero cells, row-major
  bool operator==(const KClass& o) const {
    return support == o.support && value == o.value;
  }
};

// Nonzero cells of M in row-major order: (row, col, size), 1-based.
std::vector<std::array<int, 3>> cells_row_major(const OrbitMatrix& M);

// Block sizes of the nonzero cells in row-major order.
Blocks cell_blocks(const OrbitMatrix& M);

// Local generator classes.  Base composition mu lists the diagonal part;
// the class lives on Diag(mu) plus one unit cell.
KClass local_E(const Composition& mu, int k, int p);  // cell (k, k+1)
KClass local_F(const Composition& mu, int k, int q);  // cell (k+1, k)
// Diagonal class on Diag(nu) with the Cartan polynomial value.
KClass local_H(const Composition& nu, int k, int r);
// Diagonal class with an arbitrary nu-symmetric value.
KClass local_diag(const Composition& nu, const LaurentPoly& value);

// Raised when a convolution or class action falls outside the patterns
// this model covers exactly.
struct UncoveredCase : std::runtime_error {
  explicit UncoveredCase(const std::string& what) : std::runtime_error(what) {}
};

// Convolution product c1 * c2 (c1 applied first).  nullopt iff the pair
// is not composable (column type of c1 != row type of c2).  Within the
// covered patterns the product is a single class, possibly zero-valued;
// anything else throws UncoveredCase.
std::optional<KClass> star_local(const KClass& c1, const KClass& c2);

// Action of a local class on a function value at its row component:
// pull back along rows, multiply, push forward along columns.  Requires
// every column's cells to be contiguous and column order to agree with
// row-major order (true for all covered supports); otherwise throws.
SymClass act_kclass(const KClass& c, const SymClass& input);

}  // namespace affschur
