#include "zetakit/dirichlet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "zetakit/special.hpp"

namespace zetakit {

namespace {

unsigned long powmod(unsigned long base, unsigned long exp, unsigned long mod) {
  unsigned long r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> f;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Least primitive root of (Z/p^e Z)* for odd prime p.
unsigned primitive_root(unsigned p, unsigned e) {
  unsigned long pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  unsigned long order = pe / p * (p - 1);
  std::vector<unsigned> rs = prime_divisors(static_cast<unsigned>(order));
  for (unsigned g = 2; g < pe; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (unsigned r : rs)
      if (powmod(g, order / r, pe) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw VerificationError("primitive_root: none found (impossible for odd prime powers)");
}

// One cyclic factor of (Z/qZ)*: dlog maps a residue mod `modulus` to its
// index with respect to this factor's generator, -1 off the factor's domain.
struct CyclicFactor {
  unsigned modulus;     // the prime power this factor belongs to
  unsigned order;
  unsigned generator;   // representative element (mod q) where meaningful
  std::vector<long> dlog;  // indexed by residue mod `modulus`
};

std::vector<CyclicFactor> cyclic_factors(unsigned q) {
  std::vector<CyclicFactor> out;
  if (q == 1) return out;
  for (auto& [p, e] : factorize(q)) {
    unsigned pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;  // (Z/2Z)* is trivial
      if (e == 2) {
        CyclicFactor f{pe, 2, 3, std::vector<long>(pe, -1)};
        f.dlog[1] = 0;
        f.dlog[3] = 1;
        out.push_back(std::move(f));
        continue;
      }
      // 2^e, e >= 3: (Z/2^eZ)* = {+-1} x <5>
      unsigned sub = pe / 4;  // order of <5>
      std::vector<long> five_log(pe, -1);
      unsigned long v = 1;
      for (unsigned t = 0; t < sub; ++t) {
        five_log[v] = t;
        v = v * 5 % pe;
      }
      CyclicFactor sign{pe, 2, pe - 1, std::vector<long>(pe, -1)};
      CyclicFactor five{pe, sub, 5, std::vector<long>(pe, -1)};
      for (unsigned n = 1; n < pe; n += 2) {
        if (five_log[n] >= 0) {
          sign.dlog[n] = 0;
          five.dlog[n] = five_log[n];
        } else {
          sign.dlog[n] = 1;
          five.dlog[n] = five_log[pe - n];
        }
      }
      out.push_back(std::move(sign));
      out.push_back(std::move(five));
      continue;
    }
    unsigned g = primitive_root(p, e);
    unsigned order = pe / p * (p - 1);
    CyclicFactor f{pe, order, g, std::vector<long>(pe, -1)};
    unsigned long v = 1;
    for (unsigned t = 0; t < order; ++t) {
      f.dlog[v] = t;
      v = v * g % pe;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

bool DirichletCharacter::is_principal() const {
  for (long e : exponents_)
    if (e > 0) return false;
  return true;
}

unsigned DirichletCharacter::order() const {
  unsigned k = 1;
  for (long e : exponents_) {
    if (e <= 0) continue;
    unsigned d = phi_ / std::gcd(static_cast<unsigned>(e), phi_);  // order of zeta_phi^e
    k = std::lcm(k, d);
  }
  return k;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long> conj = exponents_;
  for (long& e : conj)
    if (e > 0) e = static_cast<long>(phi_) - e;
  std::vector<unsigned> gens = generator_exponents_;
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] > 0) gens[i] = factor_orders_[i] - gens[i];
  return DirichletCharacter(modulus_, phi_, factor_orders_, std::move(gens), std::move(conj));
}

ExtComplex DirichletCharacter::value(unsigned long n, const NumericContext& ctx) const {
  long e = exponent_at(n);
  if (e < 0) return {ctx.real(0L), ctx.real(0L)};
  // quadrant exponents are exact
  const long phi = static_cast<long>(phi_);
  if (e == 0) return {ctx.real(1L), ctx.real(0L)};
  if (2 * e == phi) return {ctx.real(-1L), ctx.real(0L)};
  if (4 * e == phi) return {ctx.real(0L), ctx.real(1L)};
  if (4 * e == 3 * phi) return {ctx.real(0L), ctx.real(-1L)};
  ExtReal angle = ctx.pi() * 2L * e / static_cast<long>(phi_);
  return {cos(angle), sin(angle)};
}

CharacterGroup characters_mod(unsigned q) {
  if (q == 0) throw DomainError("characters_mod: q must be positive");
  if (q > 1000) throw DomainError("characters_mod: q capped at 1000 (desk scale)");

  CharacterGroup group;
  group.modulus = q;
  std::vector<CyclicFactor> factors = cyclic_factors(q);
  unsigned phi = 1;
  for (const auto& f : factors) phi *= f.order;
  group.phi = phi;
  for (const auto& f : factors) {
    group.generators.push_back(f.generator);
    group.factor_orders.push_back(f.order);
  }

  // Precompute each residue's discrete-log vector (or mark non-units).
  std::vector<std::vector<long>> logs(q);
  std::vector<bool> unit(q, false);
  for (unsigned n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    unit[n] = true;
    logs[n].reserve(factors.size());
    for (const auto& f : factors) {
      long l = f.dlog[n % f.modulus];
      if (l < 0) throw VerificationError("characters_mod: unit escaped the factor tables");
      logs[n].push_back(l);
    }
  }

  // Enumerate exponent tuples in mixed radix, principal character first.
  std::vector<unsigned> tuple(factors.size(), 0);
  for (unsigned idx = 0; idx < phi; ++idx) {
    std::vector<long> exps(q, -1);
    for (unsigned n = 0; n < q; ++n) {
      if (!unit[n]) continue;
      unsigned long e = 0;
      for (size_t i = 0; i < factors.size(); ++i)
        e += static_cast<unsigned long>(phi / factors[i].order) * tuple[i] * logs[n][i] % phi;
      exps[n] = static_cast<long>(e % phi);
    }
    group.characters.emplace_back(q, phi, group.factor_orders, tuple, std::move(exps));
    for (size_t i = 0; i < factors.size(); ++i) {
      if (++tuple[i] < factors[i].order) break;
      tuple[i] = 0;
    }
  }
  return group;
}

LValue l_function(const ExtReal& s, const DirichletCharacter& chi, const NumericContext& ctx) {
  if (s <= 1L) throw DomainError("l_function: requires s > 1");
  const unsigned q = chi.modulus();

  ExtComplex acc{ctx.real(0L), ctx.real(0L)};
  ExtReal inherited = ctx.real(0L);
  long terms = 0;
  for (unsigned r = 1; r <= q; ++r) {
    if (!chi.is_unit(r)) continue;
    SeriesResult hz = hurwitz_zeta(s, mpq_class(r, q), ctx);
    ExtComplex c = chi.value(r, ctx);
    acc = acc + hz.value * c;
    // |chi(r)| = 1, and norm1 <= sqrt2 componentwise
    inherited = inherited + hz.error_bound * c.norm1();
    terms += hz.terms_used;
  }
  ExtReal scale = pow(ctx.real(static_cast<long>(q)), -s);
  LValue out;
  out.value = scale * acc;
  out.error_bound = scale * inherited + detail::rounding_allowance(out.value.norm1(), q + 2);
  out.terms_used = terms;
  return out;
}

HurwitzReconstruction hurwitz_from_characters(const ExtReal& s, unsigned p, unsigned q,
                                              const NumericContext& ctx) {
  if (q < 2 || p == 0 || p >= q) throw DomainError("hurwitz_from_characters: need 0 < p < q");
  if (std::gcd(p, q) != 1) throw DomainError("hurwitz_from_characters: gcd(p,q) must be 1");
  if (s <= 1L) throw DomainError("hurwitz_from_characters: requires s > 1");

  CharacterGroup group = characters_mod(q);
  ExtComplex acc{ctx.real(0L), ctx.real(0L)};
  ExtReal inherited = ctx.real(0L);
  for (const DirichletCharacter& chi : group.characters) {
    LValue l = l_function(s, chi, ctx);
    acc = acc + chi.conjugate().value(p, ctx) * l.value;
    inherited = inherited + l.error_bound;
  }
  ExtReal scale = pow(ctx.real(static_cast<long>(q)), s) / static_cast<long>(group.phi);

  HurwitzReconstruction rec;
  rec.value = scale * acc.re();
  rec.imag = scale * acc.im();
  rec.error_bound =
      scale * inherited + detail::rounding_allowance(rec.value, 2L * group.phi);
  if (abs(rec.imag) > rec.error_bound)
    throw VerificationError(
        "hurwitz_from_characters: imaginary part failed to cancel within bounds");
  return rec;
}

ExtComplex euler_product_check(const ExtReal& s, const DirichletCharacter& chi,
                               unsigned long prime_bound, const NumericContext& ctx) {
  if (s <= 1L) throw DomainError("euler_product_check: requires s > 1");
  if (prime_bound < 2) throw DomainError("euler_product_check: prime_bound >= 2");

  std::vector<bool> composite(prime_bound + 1, false);
  ExtComplex prod{ctx.real(1L), ctx.real(0L)};
  const ExtComplex one{ctx.real(1L), ctx.real(0L)};
  for (unsigned long p = 2; p <= prime_bound; ++p) {
    if (composite[p]) continue;
    for (unsigned long k = p * p; k <= prime_bound; k += p) composite[k] = true;
    if (!chi.is_unit(p)) continue;  // chi(p) = 0: factor is 1
    ExtReal p_neg_s = pow(ctx.real(static_cast<long>(p)), -s);
    ExtComplex factor = one - p_neg_s * chi.value(p, ctx);
    prod = prod / factor;
  }
  return prod;
}

ExtReal euler_product_tail_bound(const ExtReal& s, unsigned long prime_bound,
                                 const NumericContext& ctx) {
  // sum_{n > P} n^{-s} <= integral_P^inf t^{-s} dt = P^{1-s}/(s-1)
  ExtReal P = ctx.real(static_cast<long>(prime_bound));
  return pow(P, 1L - s) / (s - 1L);
}

namespace {

std::mutex g_cyclo_mutex;
std::map<unsigned, IntPolynomial> g_cyclo;

IntPolynomial cyclotomic_unlocked(unsigned m) {
  auto it = g_cyclo.find(m);
  if (it != g_cyclo.end()) return it->second;
  // (x^m - 1) / prod_{d | m, d < m} Phi_d(x)
  std::vector<mpz_class> xm(m + 1, mpz_class(0));
  xm[0] = -1;
  xm[m] = 1;
  IntPolynomial result(std::move(xm));
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    result = result.divexact(cyclotomic_unlocked(d));
  }
  g_cyclo.emplace(m, result);
  return result;
}

}  // namespace

const IntPolynomial& cyclotomic(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic: m >= 1");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  cyclotomic_unlocked(m);
  return g_cyclo.at(m);
}

bool orthogonal_exact(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus() != b.modulus()) throw DomainError("orthogonal_exact: moduli differ");
  const unsigned q = a.modulus();
  const unsigned phi = a.phi();

  bool same = true;
  std::vector<mpz_class> counts(phi, mpz_class(0));
  for (unsigned n = 0; n < q; ++n) {
    long ea = a.exponent_at(n), eb = b.exponent_at(n);
    if ((ea < 0) != (eb < 0)) return false;  // unit sets must agree
    if (ea < 0) continue;
    if (ea != eb) same = false;
    counts[static_cast<unsigned>(((ea - eb) % phi + phi) % phi)] += 1;
  }
  // sum counts_e zeta_phi^e must equal phi (same character) or 0.
  counts[0] -= same ? static_cast<long>(phi) : 0;
  IntPolynomial diff{std::vector<mpz_class>(counts)};
  if (diff.is_zero()) return true;
  try {
    diff.divexact(cyclotomic(phi));
    return true;
  } catch (const VerificationError&) {
    return false;
  }
}

}  // namespace zetakit
