#pragma once

#include <string>
#include <vector>

#include "zetakit/numeric.hpp"
#include "zetakit/report.hpp"

namespace zetakit {

struct VerifyOptions {
  unsigned digits = 30;
  unsigned jobs = 1;
};

// Named suites: theorem-grid, hoffman, corollaries, classics, dirichlet, all.
// Every check runs twice (requested digits and doubled) and must agree to the
// requested tolerance; report order is fixed regardless of --jobs.
std::vector<Report> run_suite(const std::string& suite, const VerifyOptions& opts);

bool all_ok(const std::vector<Report>& reports);

// Shared parameter grids (also used by the acceptance harness).
const std::vector<mpq_class>& theorem_grid_a();
const std::vector<mpq_class>& hoffman_grid_a();

}  // namespace zetakit
