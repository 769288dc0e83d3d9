#pragma once

#include <vector>

#include "zetakit/cotpoly.hpp"
#include "zetakit/numeric.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit {

// A Dirichlet character mod q, stored exactly: chi(n) = zeta_phi^{e(n)} with
// zeta_phi the primitive phi(q)-th root of unity, e(n) an integer exponent,
// and chi(n) = 0 whenever gcd(n,q) > 1. All group identities hold exactly on
// the exponents; complex values are materialized only at evaluation time.
class DirichletCharacter {
public:
  DirichletCharacter(unsigned modulus, unsigned phi, std::vector<unsigned> factor_orders,
                     std::vector<unsigned> generator_exponents, std::vector<long> exponents)
      : modulus_(modulus),
        phi_(phi),
        factor_orders_(std::move(factor_orders)),
        generator_exponents_(std::move(generator_exponents)),
        exponents_(std::move(exponents)) {}

  unsigned modulus() const { return modulus_; }
  unsigned phi() const { return phi_; }
  // Defining exponents on each cyclic factor generator.
  const std::vector<unsigned>& generator_exponents() const { return generator_exponents_; }

  bool is_unit(unsigned long n) const { return exponents_[n % modulus_] >= 0; }
  // Exponent e with chi(n) = zeta_phi^e, or -1 when chi(n) = 0.
  long exponent_at(unsigned long n) const { return exponents_[n % modulus_]; }

  bool is_principal() const;
  unsigned order() const;  // least k >= 1 with chi^k principal
  DirichletCharacter conjugate() const;

  // chi(n) as a complex scalar: exp(2 pi i e(n)/phi). Fourth-root exponents
  // (0, phi/4, phi/2, 3phi/4) produce exact +-1 / +-i.
  ExtComplex value(unsigned long n, const NumericContext& ctx) const;

private:
  unsigned modulus_;
  unsigned phi_;
  std::vector<unsigned> factor_orders_;
  std::vector<unsigned> generator_exponents_;
  std::vector<long> exponents_;  // indexed by residue, -1 marks non-units
};

struct CharacterGroup {
  unsigned modulus = 1;
  unsigned phi = 1;
  std::vector<unsigned> generators;       // one per cyclic factor of (Z/qZ)*
  std::vector<unsigned> factor_orders;    // matching factor orders
  std::vector<DirichletCharacter> characters;  // all phi(q) of them, principal first
};

// All phi(q) characters mod q, built from the cyclic decomposition of
// (Z/qZ)*: primitive roots for odd prime powers, {-1, 5} for 2^k (k >= 3).
CharacterGroup characters_mod(unsigned q);

struct LValue {
  ExtComplex value;
  ExtReal error_bound;  // certified, inherited from the Hurwitz evaluations
  long terms_used = 0;
};

// L(s, chi) = q^{-s} sum_{r=1..q} chi(r) zeta(s; r/q), real s > 1.
LValue l_function(const ExtReal& s, const DirichletCharacter& chi, const NumericContext& ctx);

struct HurwitzReconstruction {
  ExtReal value;        // real part of (q^s/phi) sum_chi conj(chi(p)) L(s,chi)
  ExtReal imag;         // must vanish within error_bound
  ExtReal error_bound;
};

// The character decomposition of zeta(s, p/q); requires gcd(p,q) = 1,
// 0 < p < q. Throws if the imaginary part fails to cancel.
HurwitzReconstruction hurwitz_from_characters(const ExtReal& s, unsigned p, unsigned q,
                                              const NumericContext& ctx);

// Truncated Euler product prod_{p <= prime_bound} (1 - chi(p) p^{-s})^{-1}.
ExtComplex euler_product_check(const ExtReal& s, const DirichletCharacter& chi,
                               unsigned long prime_bound, const NumericContext& ctx);

// Crude certified truncation bound sum_{n > prime_bound} n^{-s}.
ExtReal euler_product_tail_bound(const ExtReal& s, unsigned long prime_bound,
                                 const NumericContext& ctx);

// m-th cyclotomic polynomial, exact integer coefficients (cached).
const IntPolynomial& cyclotomic(unsigned m);

// Exact orthogonality test: sum_{n mod q} chi(n) conj(chi'(n)) equals
// phi(q) [chi = chi'], decided by cyclotomic divisibility of the
// exponent-count polynomial. No floating point involved.
bool orthogonal_exact(const DirichletCharacter& a, const DirichletCharacter& b);

}  // namespace zetakit
