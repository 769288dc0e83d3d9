#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "zetakit/dirichlet.hpp"

using namespace zetakit;

namespace {

std::vector<mpz_class> zv(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

const DirichletCharacter& odd_char_mod4() {
  static const CharacterGroup g = characters_mod(4);
  return g.characters[g.characters[0].is_principal() ? 1 : 0];
}

}  // namespace

TEST_SUITE_BEGIN("dirichlet");

TEST_CASE("characters mod 4: principal plus the odd character") {
  CharacterGroup g = characters_mod(4);
  CHECK(g.phi == 2);
  REQUIRE(g.characters.size() == 2);
  CHECK(g.characters[0].is_principal());
  CHECK_FALSE(g.characters[1].is_principal());
  // chi(3) = -1: exponent phi/2 of the phi-th root of unity
  CHECK(g.characters[1].exponent_at(3) == 1);
  CHECK(g.characters[1].exponent_at(2) == -1);
  NumericContext ctx(30);
  CHECK(g.characters[1].value(3, ctx).re() == ctx.real(-1L));
  CHECK(g.characters[1].value(3, ctx).im() == ctx.real(0L));
}

TEST_CASE("characters mod 8: Klein four-group, all values +-1") {
  CharacterGroup g = characters_mod(8);
  CHECK(g.phi == 4);
  REQUIRE(g.characters.size() == 4);
  for (const auto& chi : g.characters) {
    CHECK(chi.order() <= 2);  // every character is real
    for (unsigned n = 0; n < 8; ++n) {
      long e = chi.exponent_at(n);
      if (n % 2 == 0)
        CHECK(e == -1);
      else
        CHECK((e == 0 || e == 2));  // exponent of zeta_4: +-1
    }
  }
  // distinctness: 4 distinct characters = the full homomorphism set
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) {
      bool differ = false;
      for (unsigned n = 1; n < 8; n += 2)
        differ |= g.characters[i].exponent_at(n) != g.characters[j].exponent_at(n);
      CHECK(differ);
    }
}

TEST_CASE("characters mod 5: fourth roots of unity on the generator 2") {
  CharacterGroup g = characters_mod(5);
  CHECK(g.phi == 4);
  REQUIRE(g.characters.size() == 4);
  // the four characters take the four distinct exponents at the generator
  std::vector<bool> seen(4, false);
  for (const auto& chi : g.characters) {
    long e = chi.exponent_at(2);
    REQUIRE(e >= 0);
    REQUIRE(e < 4);
    seen[static_cast<size_t>(e)] = true;
  }
  CHECK(seen == std::vector<bool>(4, true));
}

TEST_CASE("property: multiplicativity is exact on exponents") {
  for (unsigned q : {4u, 5u, 8u, 9u, 12u, 24u, 40u, 49u, 64u, 81u, 100u}) {
    CharacterGroup g = characters_mod(q);
    CHECK(g.characters.size() == g.phi);
    for (const auto& chi : g.characters) {
      CHECK(chi.exponent_at(1) == 0);  // chi(1) = 1
      for (unsigned m = 0; m < q; ++m)
        for (unsigned n = 0; n < q; ++n) {
          long em = chi.exponent_at(m), en = chi.exponent_at(n);
          long emn = chi.exponent_at(static_cast<unsigned long>(m) * n);
          if (em < 0 || en < 0)
            CHECK(emn == -1);
          else
            CHECK(emn == (em + en) % static_cast<long>(g.phi));
        }
    }
  }
}

TEST_CASE("property: orthogonality is exact for q <= 50") {
  for (unsigned q = 1; q <= 50; ++q) {
    CharacterGroup g = characters_mod(q);
    size_t principals = 0;
    for (const auto& chi : g.characters) principals += chi.is_principal();
    CHECK(principals == 1);
    for (const auto& c1 : g.characters)
      for (const auto& c2 : g.characters) CHECK(orthogonal_exact(c1, c2));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1).coefficients() == zv({-1, 1}));
  CHECK(cyclotomic(2).coefficients() == zv({1, 1}));
  CHECK(cyclotomic(4).coefficients() == zv({1, 0, 1}));
  CHECK(cyclotomic(6).coefficients() == zv({1, -1, 1}));
  CHECK(cyclotomic(12).coefficients() == zv({1, 0, -1, 0, 1}));
}

TEST_CASE("l_function pinned values") {
  NumericContext ctx(30);

  // L(2, odd mod 4) = Catalan
  LValue l = l_function(ctx.real(2L), odd_char_mod4(), ctx);
  CHECK(abs(l.value.re() - ctx.catalan()) <= l.error_bound + ctx.tolerance());
  CHECK(abs(l.value.im()) <= l.error_bound);

  // principal mod 1: plain zeta
  CharacterGroup g1 = characters_mod(1);
  LValue lz = l_function(ctx.real(3L), g1.characters[0], ctx);
  SeriesResult z3 = riemann_zeta(ctx.real(3L), ctx);
  CHECK(abs(lz.value.re() - z3.value) <= lz.error_bound + z3.error_bound);

  // principal mod 2 at s=2: (1 - 2^{-2}) zeta(2) = pi^2/8
  CharacterGroup g2 = characters_mod(2);
  LValue l2 = l_function(ctx.real(2L), g2.characters[0], ctx);
  CHECK(abs(l2.value.re() - ctx.pi() * ctx.pi() / 8L) <= l2.error_bound + ctx.tolerance());

  CHECK_THROWS_AS(l_function(ctx.real(1L), odd_char_mod4(), ctx), DomainError);
}

TEST_CASE("hurwitz_from_characters pinned reconstructions") {
  NumericContext ctx(30);

  // (2,1,2): zeta(2;1/2) = 3 zeta(2) = pi^2/2
  HurwitzReconstruction r = hurwitz_from_characters(ctx.real(2L), 1, 2, ctx);
  CHECK(abs(r.value - ctx.pi() * ctx.pi() / 2L) <= r.error_bound + ctx.tolerance());

  // (2,1,4) matches hurwitz_zeta(2, 1/4)
  HurwitzReconstruction r14 = hurwitz_from_characters(ctx.real(2L), 1, 4, ctx);
  SeriesResult hz14 = hurwitz_zeta(ctx.real(2L), mpq_class(1, 4), ctx);
  CHECK(abs(r14.value - hz14.value) <= r14.error_bound + hz14.error_bound);

  // (3,2,3) matches hurwitz_zeta(3, 2/3), frozen digits too
  HurwitzReconstruction r23 = hurwitz_from_characters(ctx.real(3L), 2, 3, ctx);
  SeriesResult hz23 = hurwitz_zeta(ctx.real(3L), mpq_class(2, 3), ctx);
  CHECK(abs(r23.value - hz23.value) <= r23.error_bound + hz23.error_bound);
  CHECK(abs(r23.value - ctx.parse("3.6924182824486476441653142218901904753475")) <=
        ctx.tolerance());

  CHECK_THROWS_AS(hurwitz_from_characters(ctx.real(2L), 2, 4, ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_from_characters(ctx.real(2L), 3, 2, ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_from_characters(ctx.real(1L), 1, 2, ctx), DomainError);
}

TEST_CASE("euler product truncations") {
  NumericContext ctx(30);

  // one-term product: (1 - chi(2) 2^{-s})^{-1} for the principal character
  CharacterGroup g1 = characters_mod(1);
  ExtComplex single = euler_product_check(ctx.real(2L), g1.characters[0], 2, ctx);
  CHECK(abs(single.re() - ctx.real(4L) / 3L) <= single.re().ulp() * 64L);
  CHECK(single.im() == ctx.real(0L));

  // truncated at 1e4: inside the crude tail bound of zeta(2)
  ExtComplex prod = euler_product_check(ctx.real(2L), g1.characters[0], 10000, ctx);
  SeriesResult z2 = riemann_zeta(ctx.real(2L), ctx);
  ExtReal tail = euler_product_tail_bound(ctx.real(2L), 10000, ctx);
  CHECK(abs(prod.re() - z2.value) <= tail + z2.error_bound);
  CHECK(abs(prod.re() - z2.value) > tail / 1000L);  // the bound is not absurdly slack

  // odd character mod 4 at 1e4 vs Catalan
  ExtComplex pb = euler_product_check(ctx.real(2L), odd_char_mod4(), 10000, ctx);
  CHECK(abs(pb.re() - ctx.catalan()) <= tail);

  CHECK_THROWS_AS(euler_product_check(ctx.real(2L), odd_char_mod4(), 1, ctx), DomainError);
}

TEST_CASE("l_function of a complex character against the definitional sum") {
  // L is computed via the Hurwitz decomposition; the oracle is the direct
  // truncated sum chi(n)/n^s with the integral tail bracket applied to each
  // component.
  NumericContext ctx(30);
  CharacterGroup g = characters_mod(5);
  const long s = 3, K = 3000;
  for (const DirichletCharacter& chi : g.characters) {
    LValue l = l_function(ctx.real(s), chi, ctx);
    ExtReal re = ctx.real(0L), im = ctx.real(0L);
    for (long n = 1; n <= K; ++n) {
      if (!chi.is_unit(static_cast<unsigned long>(n))) continue;
      ExtReal w = pow(ctx.real(n), -s);
      ExtComplex c = chi.value(static_cast<unsigned long>(n), ctx);
      re = re + w * c.re();
      im = im + w * c.im();
    }
    // |tail| <= sum_{n>K} n^{-s} <= K^{1-s}/(s-1) componentwise
    ExtReal tail = pow(ctx.real(K), 1 - s) / (s - 1);
    CHECK(abs(l.value.re() - re) <= tail + l.error_bound);
    CHECK(abs(l.value.im() - im) <= tail + l.error_bound);
  }
}

TEST_CASE("domain errors for characters_mod") {
  CHECK_THROWS_AS(characters_mod(0), DomainError);
  CHECK_THROWS_AS(characters_mod(1001), DomainError);
  CHECK(characters_mod(1000).phi == 400);
}

TEST_SUITE_END();
