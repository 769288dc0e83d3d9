#pragma once

#include "zetakit/numeric.hpp"

namespace zetakit {

// A computed series value with its certified error bound. The bound is the
// analytic tail/remainder certificate plus a rounding allowance of 16 ulp per
// accumulated term; re-evaluation at doubled precision stays within it.
struct SeriesResult {
  ExtReal value;
  ExtReal error_bound;   // certified, >= 0, finite
  long terms_used = 0;
  long precision_bits = 0;
};

// Knobs used by the bound-honesty harness; defaults reproduce normal
// evaluation. extend_terms > 1 keeps summing past the certified stopping
// point (the reported bound must dominate whatever the extra terms add).
struct SeriesOptions {
  double extend_terms = 1.0;
};

namespace detail {
// 16 ulp per accumulated term, the standing rounding allowance.
inline ExtReal rounding_allowance(const ExtReal& value, long terms) {
  return value.ulp() * (16 * std::max(terms, 1L));
}
}  // namespace detail

}  // namespace zetakit
