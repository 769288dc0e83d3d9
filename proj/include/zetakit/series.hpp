#pragma once

#include <string>
#include <utility>

#include "zetakit/numeric.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit {

// Parameters of the binomial zeta series sum_n a^{2n} zeta(2n) C(2n,m) / n.
// a is held as an exact rational; decimal input is converted at context
// precision and flagged inexact so reports can say so.
struct BinomSeriesQuery {
  mpq_class a;
  unsigned m = 1;
  bool exact_a = true;

  static BinomSeriesQuery rational(mpq_class a, unsigned m);
  static BinomSeriesQuery decimal(const std::string& a, unsigned m, const NumericContext& ctx);
};

// Direct truncated summation of the series, first index n = ceil(m/2)
// (C(2n,m) vanishes below it). Certified geometric tail once the term-ratio
// bound a^2 ((2n+3-m)/(2n+1-m))^m n/(n+1) drops under the gate.
SeriesResult binom_series_direct(const BinomSeriesQuery& q, const ExtReal& target_eps,
                                 const NumericContext& ctx, const SeriesOptions& opts = {});

// (-1)^m zeta(m;a) + zeta(m;1-a) for m >= 2; the paired combined value
// -pi cot(pi a) at m = 1 (each Hurwitz piece alone diverges there).
SeriesResult paired_hurwitz_result(unsigned m, const mpq_class& a, const NumericContext& ctx);
ExtReal paired_hurwitz(unsigned m, const mpq_class& a, const NumericContext& ctx);

// Closed form: (a^m/m) [(-1)^m zeta(m;a) + zeta(m;1-a)] + (-1)^{m-1}/m.
SeriesResult binom_series_closed_result(const BinomSeriesQuery& q, const NumericContext& ctx);
ExtReal binom_series_closed(const BinomSeriesQuery& q, const NumericContext& ctx);

// a = 1/2 specialization: 1/m for odd m, (2 zeta(m)(1-2^{-m}) - 1)/m for
// even m. Checked against binom_series_closed(1/2, m) before returning.
// The _result form carries the bound inherited from the zeta evaluation
// (the even branches cancel heavily, so ulp-of-result is not enough).
SeriesResult corollary_half_result(unsigned m, const NumericContext& ctx);
ExtReal corollary_half(unsigned m, const NumericContext& ctx);

// a = 1/4 specialization: (1-beta(m))/m odd, (zeta(m)(1-2^{-m}) - 1)/m even.
SeriesResult corollary_quarter_result(unsigned m, const NumericContext& ctx);
ExtReal corollary_quarter(unsigned m, const NumericContext& ctx);

// Truncations of sum zeta(2n) x^{2n} and sum zeta(2n) x^{2n}/n, each checked
// against its closed form ((1 - pi x cot pi x)/2 resp. log(pi x / sin pi x)).
std::pair<SeriesResult, SeriesResult> cot_expansion(const ExtReal& x, const NumericContext& ctx,
                                                    const SeriesOptions& opts = {});

enum class ClassicId { goldbach, log2, one_minus_gamma, tyler_chernoff };

const char* classic_name(ClassicId id);
ClassicId classic_from_name(const std::string& name);

// Truncated left side of the named classic series with a certified tail.
SeriesResult classic_identity(ClassicId id, const NumericContext& ctx,
                              const SeriesOptions& opts = {});

// The matching right side: 1, log 2, 1-gamma, log pi - 1.
ExtReal classic_closed_form(ClassicId id, const NumericContext& ctx);

// Term-by-term integration of the log-form cotangent expansion over
// [0, 1/2]; independently rebuilds the coefficients of the tyler_chernoff
// series (equals log pi - 1).
SeriesResult integrated_log_expansion(const NumericContext& ctx);

}  // namespace zetakit
