#pragma once

#include <string>
#include <vector>

#include "mvg/core/multivalued_group.hpp"

namespace mvg {

struct Counterexample {
  std::string axiom;  // associative | identity | inverse | involutive | reciprocity
  std::string condition;
  std::vector<Element> witness;
};

// Result of one or more axiom checks. Flags cover the checks that produced
// the report; a flag is false iff a counterexample with its name is listed.
struct AxiomReport {
  bool associative = true;
  bool has_identity = true;
  bool has_inverses = true;
  bool involutive = true;
  bool reciprocity_holds = true;
  std::vector<Counterexample> counterexamples;

  bool all_pass() const {
    return associative && has_identity && has_inverses && involutive && reciprocity_holds;
  }

  void fail(std::string axiom, std::string condition, std::vector<Element> witness);
  void merge(const AxiomReport& other);
};

// Associativity as the convolution identity
//   sum_w m[x][y][w] m[w][z][t] = sum_w m[y][z][w] m[x][w][t]
// over all quadruples, plus the identity and inverse laws.
AxiomReport verify_axioms(const MultivaluedGroup& g);

// Star is an involution fixing e, and
//   (a) m[x][y][e] > 0  <=>  y = x*
//   (b) m(x) = m(x*)
//   (c) m[x][y][z] = m[y*][x*][z*].
AxiomReport verify_involutive(const MultivaluedGroup& g);

// m(x) m[y][z][x*] = m(y) m[z][x][y*] for all x, y, z.
// Throws InputError if g is not involutive.
bool check_reciprocity(const MultivaluedGroup& g);

// All five checks; reciprocity is evaluated even when involutivity fails.
AxiomReport full_report(const MultivaluedGroup& g);

// Throws NotAGroupError with the first counterexample unless g passes
// verify_axioms and verify_involutive. Returns g unchanged.
const MultivaluedGroup& require_involutive_group(const MultivaluedGroup& g);

}  // namespace mvg
