#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meander/bracket.hpp"
#include "meander/diagram.hpp"
#include "meander/polynomial.hpp"

namespace meander {

// Shadow of a diagram with the A-smoothing pairing of each crossing.
struct BracketInput {
  BracketNetwork network;
  std::vector<std::uint8_t> a_pairing;
  std::vector<int> order;
};
BracketInput bracket_input(const Diagram& d);

LaurentPolynomial kauffman_bracket(const Diagram& d);
ModP kauffman_bracket_mod(const Diagram& d, ModP a);
// Plain sum over all 2^n states, read off the Gauss code and signs (n <= 20).
LaurentPolynomial kauffman_bracket_state_sum(const Diagram& d);
// (-A^3)^(-w) <D>
LaurentPolynomial normalized_bracket(const Diagram& d);
// Jones polynomial in s = t^(1/2): A^e maps to s^(-e/2).
LaurentPolynomial jones_polynomial(const Diagram& d);
// Shift to lowest exponent 0 with a positive lowest coefficient.
LaurentPolynomial unit_normalize(const LaurentPolynomial& p);
// Smaller of the unit-normalized polynomial and its mirror.
LaurentPolynomial chirality_class(const LaurentPolynomial& p);

struct Fingerprint {
  int n_components = 0;
  int reduced_crossings = 0;
  LaurentPolynomial normalized_bracket;
  LaurentPolynomial chirality_class;

  // Equality is type-level: component count and chirality class.
  bool operator==(const Fingerprint& o) const {
    return n_components == o.n_components && chirality_class == o.chirality_class;
  }
  bool operator<(const Fingerprint& o) const {
    if (n_components != o.n_components) return n_components < o.n_components;
    return chirality_class < o.chirality_class;
  }
  std::string key() const;
};

Fingerprint fingerprint(const Diagram& d);
Fingerprint fingerprint_from_bracket(int components, const LaurentPolynomial& normalized, int crossings = 0);

std::int64_t determinant(const Diagram& d);
// Knots only. Normalized to lowest exponent 0 and positive value at t = 1.
LaurentPolynomial alexander_polynomial(const Diagram& d);
std::int64_t determinant_from_bracket(const LaurentPolynomial& normalized);
std::vector<std::vector<int>> linking_matrix(const Diagram& d);

// Cokernel of the Fox coloring matrix: the torsion part and the extra free rank
// (one trivial Z summand removed).
struct ColoringModule {
  std::vector<std::int64_t> torsion;
  int free_rank = 0;
  bool operator==(const ColoringModule&) const = default;
  auto operator<=>(const ColoringModule&) const = default;
  std::string str() const;
};
std::vector<std::vector<std::int64_t>> coloring_matrix(const Diagram& d);
ColoringModule coloring_module(const Diagram& d);
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m);

}  // namespace meander
