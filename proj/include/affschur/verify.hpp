#pragma once

// Machine verification: the defining relation families checked as exact
// operator identities on box bases, convolution-vs-operator consistency,
// local generation of the block-symmetric ring by Cartan polynomials, and
// the distinguished witness classes.

#include <string>
#include <vector>

#include "affschur/combinat.hpp"
#include "affschur/kclasses.hpp"

namespace affschur {

struct Report {
  std::string tag;
  int n = 0;
  int d = 0;
  int window = 0;
  long instances = 0;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

// All relation tags, in catalog order.
std::vector<std::string> relation_tags();

// Check one relation family: every valid index instance, with degree
// parameters ranging over [-window, window].
Report verify_relation(const std::string& tag, int n, int d, int window);

// Every tag whose index range is non-empty at this (n, d).
std::vector<Report> verify_all(int n, int d, int window);

// The three degree-zero braid-type tags.
std::vector<Report> verify_plactic(int n, int d);

// For every composable pair of local classes at this scale whose
// convolution is covered: the action of the convolution equals the
// composition of the actions, on the full box basis of the source.
Report verify_star_vs_op(int n, int d, int window);

// Local generation at the component mu: each target class (complete
// homogeneous generators per block and the inverted top elementary) is an
// exact rational combination of products of at most three Cartan
// polynomials of degree |r| <= deg + max(mu).
struct GenerationReport {
  Composition mu;
  int targets = 0;
  int generated = 0;
  bool pass = false;
};
GenerationReport generation_check(const Composition& mu, int deg);

// The distinguished witness for mu: the product of Cartan polynomials of
// degrees -mu_k, evaluated on every component; checks the scoped vanishing
// pattern and the diagonal value.
struct WitnessReport {
  Composition mu;
  long components = 0;
  bool pass = true;
  std::string counterexample;
};
WitnessReport witness_b(const Composition& mu);

bool all_pass(const std::vector<Report>& reports);

}  // namespace affschur
