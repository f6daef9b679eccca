#pragma once

// Deterministic irreducibility checks for extension moduli. Each throws
// ReducibleModulus on a proven factorization and UnverifiableModulus when the
// desk-scale methods can neither prove nor refute irreducibility.

#include "spanbound/fields.hpp"
#include "spanbound/polynomial.hpp"
#include "spanbound/rational_function_field.hpp"

namespace spanbound {

// Rabin's test; g need not be monic. Degree-0 polynomials are not irreducible.
bool is_irreducible(const PrimeField& f, const poly::Poly<PrimeField>& g);

void check_irreducible(const PrimeField& f, const poly::Poly<PrimeField>& g);
void check_irreducible(const RationalField& f, const poly::Poly<RationalField>& g);
void check_irreducible(const RationalFunctionField<PrimeField>& f, const poly::Poly<RationalFunctionField<PrimeField>>& g);
void check_irreducible(const RationalFunctionField<RationalField>& f,
                       const poly::Poly<RationalFunctionField<RationalField>>& g);

// Lexicographically smallest monic irreducible polynomial of degree n over GF(p).
poly::Poly<PrimeField> smallest_irreducible(const PrimeField& f, int n);

}  // namespace spanbound
