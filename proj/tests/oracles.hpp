#pragma once

// Test-side oracles, kept independent of the evaluation paths they check:
// brute-force partial sums with certified integral/alternation brackets, the
// Bernoulli closed form for zeta(2n), and a small symbolic differentiation
// engine over sin/cos polynomials.

#include <vector>

#include "zetakit/numeric.hpp"
#include "zetakit/special.hpp"

namespace oracle {

using zetakit::ExtReal;
using zetakit::NumericContext;

struct Bracket {
  ExtReal lo, hi;

  bool contains(const ExtReal& v, const ExtReal& slack) const {
    return v >= lo - slack && v <= hi + slack;
  }
  ExtReal width() const { return hi - lo; }
  ExtReal mid() const { return (lo + hi) / 2L; }
};

// Rounding slack for a K-term brute-force sum at context precision.
inline ExtReal sum_slack(const ExtReal& scale, long terms, const NumericContext& ctx) {
  return (abs(scale) + ctx.real(1L)) * terms * zetakit::pow(ctx.real(2L), 40 - ctx.precision_bits());
}

// sum_{k=0}^{K-1} (k+a)^{-s} plus the integral bracket of the tail:
// the tail of a positive decreasing term lies between int_K and int_{K-1}.
inline Bracket hurwitz_bracket(long s, const mpq_class& a, long K, const NumericContext& ctx) {
  ExtReal partial = ctx.real(0L);
  for (long k = 0; k < K; ++k) partial = partial + zetakit::pow(ctx.real(a + k), -s);
  auto tail_from = [&](long edge) {
    // int_edge^inf (t+a)^{-s} dt = (edge+a)^{1-s}/(s-1)
    return zetakit::pow(ctx.real(a + edge), 1 - s) / (s - 1);
  };
  return Bracket{partial + tail_from(K), partial + tail_from(K - 1)};
}

// Alternating sum: consecutive partial sums bracket the limit.
inline Bracket alt_bracket(long s, const mpq_class& a, long K, const NumericContext& ctx) {
  ExtReal partial = ctx.real(0L);
  for (long k = 0; k < K; ++k) {
    ExtReal term = zetakit::pow(ctx.real(a + k), -s);
    partial = (k % 2 == 0) ? partial + term : partial - term;
  }
  ExtReal next = zetakit::pow(ctx.real(a + K), -s);
  ExtReal other = (K % 2 == 0) ? partial + next : partial - next;
  return (partial < other) ? Bracket{partial, other} : Bracket{other, partial};
}

// sum_k [1/(k+a) - 1/(k+1-a)], the combined m=1 pairing (= pi cot pi a).
inline Bracket paired_m1_bracket(const mpq_class& a, long K, const NumericContext& ctx) {
  ExtReal partial = ctx.real(0L);
  for (long k = 0; k < K; ++k)
    partial = partial + 1L / ctx.real(a + k) - 1L / ctx.real(1 - a + k);
  auto tail_from = [&](long edge) {
    // int_edge^inf [1/(t+a) - 1/(t+1-a)] dt = log((edge+1-a)/(edge+a))
    return log(ctx.real(1 - a + edge) / ctx.real(a + edge));
  };
  ExtReal t1 = tail_from(K), t0 = tail_from(K - 1);
  return (t1 < t0) ? Bracket{partial + t1, partial + t0} : Bracket{partial + t0, partial + t1};
}

// zeta(2n) through the Bernoulli closed form (2pi)^{2n} |B_{2n}| / (2 (2n)!),
// an exact route independent of Euler-Maclaurin.
inline ExtReal zeta_even_bernoulli(unsigned n, const NumericContext& ctx) {
  mpq_class b = zetakit::bernoulli_number(2 * n);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), 2 * n);
  mpq_class coeff = abs(b) / (2 * mpq_class(fact));
  return zetakit::pow(2L * ctx.pi(), 2L * n) * ctx.real(coeff);
}

// Bivariate integer polynomial in (sin x, cos x); together with a sin-power
// denominator it is closed under differentiation, which is all the symbolic
// cot-derivative oracle needs.
class SinCosPoly {
public:
  SinCosPoly() : c_(1, std::vector<mpz_class>(1, mpz_class(0))) {}

  static SinCosPoly term(unsigned i, unsigned j, long coeff) {
    SinCosPoly p;
    p.c_.assign(i + 1, {});
    for (auto& row : p.c_) row.assign(j + 1, mpz_class(0));
    p.c_[i][j] = coeff;
    return p;
  }

  mpz_class at(size_t i, size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return 0;
    return c_[i][j];
  }
  size_t si() const { return c_.size(); }
  size_t sj() const {
    size_t m = 0;
    for (const auto& row : c_) m = std::max(m, row.size());
    return m;
  }

  SinCosPoly plus(const SinCosPoly& o) const {
    SinCosPoly r;
    r.c_.assign(std::max(si(), o.si()), {});
    size_t cols = std::max(sj(), o.sj());
    for (size_t i = 0; i < r.c_.size(); ++i) {
      r.c_[i].assign(cols, mpz_class(0));
      for (size_t j = 0; j < cols; ++j) r.c_[i][j] = at(i, j) + o.at(i, j);
    }
    return r;
  }

  SinCosPoly scaled(long k) const {
    SinCosPoly r = *this;
    for (auto& row : r.c_)
      for (auto& v : row) v *= k;
    return r;
  }

  SinCosPoly shift_s(unsigned d) const {  // multiply by sin^d
    SinCosPoly r;
    r.c_.assign(si() + d, {});
    for (size_t i = 0; i < si(); ++i) r.c_[i + d] = c_[i];
    return r;
  }

  SinCosPoly shift_c(unsigned d) const {  // multiply by cos^d
    SinCosPoly r = *this;
    for (auto& row : r.c_) row.insert(row.begin(), d, mpz_class(0));
    return r;
  }

  // d/dx with sin' = cos, cos' = -sin.
  SinCosPoly derivative() const {
    SinCosPoly r;
    for (size_t i = 0; i < si(); ++i) {
      for (size_t j = 0; j < c_[i].size(); ++j) {
        if (c_[i][j] == 0) continue;
        if (i > 0) {
          SinCosPoly t = term(static_cast<unsigned>(i - 1), static_cast<unsigned>(j + 1),
                              static_cast<long>(i));
          t.scale_by(c_[i][j]);
          r = r.plus(t);
        }
        if (j > 0) {
          SinCosPoly t = term(static_cast<unsigned>(i + 1), static_cast<unsigned>(j - 1),
                              -static_cast<long>(j));
          t.scale_by(c_[i][j]);
          r = r.plus(t);
        }
      }
    }
    return r;
  }

  ExtReal eval(const ExtReal& s, const ExtReal& c, const NumericContext& ctx) const {
    ExtReal acc = ctx.real(0L);
    for (size_t i = 0; i < si(); ++i)
      for (size_t j = 0; j < c_[i].size(); ++j) {
        if (c_[i][j] == 0) continue;
        acc = acc + ctx.real(c_[i][j]) * zetakit::pow(s, static_cast<long>(i)) *
                        zetakit::pow(c, static_cast<long>(j));
      }
    return acc;
  }

private:
  void scale_by(const mpz_class& z) {
    for (auto& row : c_)
      for (auto& v : row) v *= z;
  }
  std::vector<std::vector<mpz_class>> c_;  // c_[i][j] * sin^i cos^j
};

// cot and its derivatives as N(sin,cos)/sin^k, via the quotient rule only.
struct TrigQuotient {
  SinCosPoly num;
  unsigned sin_pow;

  static TrigQuotient cot() { return {SinCosPoly::term(0, 1, 1), 1}; }

  TrigQuotient derivative() const {
    // (N/s^k)' = (N' s - k c N) / s^{k+1}
    SinCosPoly n2 = num.derivative().shift_s(1).plus(
        num.shift_c(1).scaled(-static_cast<long>(sin_pow)));
    return {n2, sin_pow + 1};
  }

  ExtReal eval(const ExtReal& x, const NumericContext& ctx) const {
    ExtReal s = sin(x), c = cos(x);
    return num.eval(s, c, ctx) / zetakit::pow(s, static_cast<long>(sin_pow));
  }
};

// n-th derivative of cot at x, fully symbolic until the final evaluation.
inline ExtReal cot_derivative_symbolic(unsigned n, const ExtReal& x, const NumericContext& ctx) {
  TrigQuotient q = TrigQuotient::cot();
  for (unsigned i = 0; i < n; ++i) q = q.derivative();
  return q.eval(x, ctx);
}

}  // namespace oracle
