#include "zetakit/verify.hpp"

#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "zetakit/cotpoly.hpp"
#include "zetakit/dirichlet.hpp"
#include "zetakit/series.hpp"
#include "zetakit/special.hpp"

namespace zetakit {

namespace {

using Task = std::function<Report()>;

struct Routed {
  SeriesResult lhs;
  SeriesResult rhs;
};

SeriesResult point(ExtReal value, long ulps = 64) {
  SeriesResult r;
  r.error_bound = value.ulp() * ulps;
  r.precision_bits = value.precision_bits();
  r.terms_used = 1;
  r.value = std::move(value);
  return r;
}

// The standing check shape: both routes at the requested digits must agree
// within their combined certified bounds AND within tolerance; re-running at
// doubled digits must reproduce both values to tolerance.
Report two_route(const std::string& query, unsigned digits,
                 const std::function<Routed(const NumericContext&)>& compute,
                 const ExtReal* tol_override = nullptr) {
  Report rep;
  rep.query = query;
  try {
    NumericContext ctx(digits);
    Routed r = compute(ctx);
    Routed r2 = compute(ctx.doubled());
    // The tolerance backstop scales with the value magnitude: Hurwitz values
    // reach 10^m on the grid, where an absolute 10^{-(digits-5)} is beyond
    // what the pinned guard bits can deliver. The certified-bound gate stays
    // absolute and is the rigorous one.
    ExtReal tol = tol_override ? *tol_override : ctx.tolerance();
    if (!tol_override)
      tol = tol * max(ctx.real(1L), max(abs(r.lhs.value), abs(r.rhs.value)));

    ExtReal gap = abs(r.lhs.value - r.rhs.value);
    bool ok = gap <= r.lhs.error_bound + r.rhs.error_bound && gap <= tol &&
              abs(r.lhs.value - r2.lhs.value) <= tol &&
              abs(r.rhs.value - r2.rhs.value) <= tol;

    rep.value = r.lhs.value.str();
    rep.error_bound = (r.lhs.error_bound + r.rhs.error_bound).str(8);
    rep.terms_used = r.lhs.terms_used + r.rhs.terms_used;
    rep.precision_bits = ctx.precision_bits();
    rep.lhs = r.lhs.value.str();
    rep.rhs = r.rhs.value.str();
    rep.status = ok ? Report::Status::ok : Report::Status::mismatch;
  } catch (const std::exception& e) {
    rep.status = Report::Status::error;
    rep.rhs = e.what();
  }
  return rep;
}

// Boolean checks (exact group identities): ok iff the predicate holds.
Report exact_check(const std::string& query, const std::function<bool()>& pred) {
  Report rep;
  rep.query = query;
  try {
    bool ok = pred();
    rep.value = ok ? "1" : "0";
    rep.status = ok ? Report::Status::ok : Report::Status::mismatch;
  } catch (const std::exception& e) {
    rep.status = Report::Status::error;
    rep.rhs = e.what();
  }
  return rep;
}

std::vector<Report> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<Report> reports(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    return reports;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      reports[i] = tasks[i]();
    }
    // constants cached thread-locally by mpfr would otherwise outlive the
    // thread unreachably
    mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return reports;
}

std::vector<Task> theorem_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (const mpq_class& a : theorem_grid_a()) {
    for (unsigned m = 1; m <= 12; ++m) {
      std::string query = "theorem a=" + a.get_str() + " m=" + std::to_string(m);
      tasks.push_back([query, a, m, opt] {
        return two_route(query, opt.digits, [a, m](const NumericContext& ctx) {
          BinomSeriesQuery q = BinomSeriesQuery::rational(a, m);
          return Routed{binom_series_direct(q, ctx.target_eps(), ctx),
                        binom_series_closed_result(q, ctx)};
        });
      });
    }
  }
  return tasks;
}

std::vector<Task> hoffman_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (unsigned n = 0; n <= 10; ++n) {
    for (const mpq_class& a : hoffman_grid_a()) {
      std::string qa = "hoffman-a n=" + std::to_string(n) + " a=" + a.get_str();
      tasks.push_back([qa, n, a, opt] {
        return two_route(qa, opt.digits, [n, a](const NumericContext& ctx) {
          return Routed{hoffman_lhs_a(n, a, ctx), point(hoffman_rhs_a(n, a, ctx), 256)};
        });
      });
      std::string qb = "hoffman-b n=" + std::to_string(n) + " a=" + a.get_str();
      tasks.push_back([qb, n, a, opt] {
        return two_route(qb, opt.digits, [n, a](const NumericContext& ctx) {
          return Routed{hoffman_lhs_b(n, a, ctx), point(hoffman_rhs_b(n, a, ctx), 256)};
        });
      });
    }
  }
  // The proof body's (n+1)! normalization must fail. n! and (n+1)! coincide
  // at n=0, so the variant is exercised on n in {0,1}: it must pass the
  // whole n=0 row and miss every n=1 cell.
  tasks.push_back([opt] {
    return exact_check("hoffman erratum: (n+1)! variant fails the anchor grid", [&opt] {
      NumericContext ctx(opt.digits);
      size_t misses = 0, cells = 0;
      for (unsigned n = 0; n <= 1; ++n) {
        for (const mpq_class& a : hoffman_grid_a()) {
          SeriesResult lhs = hoffman_lhs_a(n, a, ctx);
          ExtReal variant = hoffman_rhs_a(n, a, ctx, /*wrong_normalization=*/true);
          ++cells;
          if (abs(lhs.value - variant) > lhs.error_bound + ctx.tolerance()) ++misses;
        }
      }
      return misses == cells / 2;  // exactly the n=1 row
    });
  });
  return tasks;
}

std::vector<Task> corollary_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (unsigned m = 1; m <= 12; ++m) {
    std::string qh = "corollary-half m=" + std::to_string(m);
    tasks.push_back([qh, m, opt] {
      return two_route(qh, opt.digits, [m](const NumericContext& ctx) {
        return Routed{corollary_half_result(m, ctx),
                      binom_series_closed_result(
                          BinomSeriesQuery::rational(mpq_class(1, 2), m), ctx)};
      });
    });
    std::string qq = "corollary-quarter m=" + std::to_string(m);
    tasks.push_back([qq, m, opt] {
      return two_route(qq, opt.digits, [m](const NumericContext& ctx) {
        return Routed{corollary_quarter_result(m, ctx),
                      binom_series_closed_result(
                          BinomSeriesQuery::rational(mpq_class(1, 4), m), ctx)};
      });
    });
  }
  return tasks;
}

std::vector<Task> classic_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;

  struct CotCase {
    const char* name;
    mpq_class x;
    bool logform;
  };
  const CotCase cot_cases[] = {
      {"sum zeta(2n)/4^n", mpq_class(1, 2), false},
      {"sum zeta(2n)/16^n", mpq_class(1, 4), false},
      {"sum zeta(2n)/(n 4^n)", mpq_class(1, 2), true},
      {"sum zeta(2n)/(n 16^n)", mpq_class(1, 4), true},
  };
  for (const CotCase& c : cot_cases) {
    std::string query = std::string("classic ") + c.name;
    mpq_class x = c.x;
    bool logform = c.logform;
    tasks.push_back([query, x, logform, opt] {
      return two_route(query, opt.digits, [x, logform](const NumericContext& ctx) {
        auto pair = cot_expansion(ctx.real(x), ctx);
        ExtReal pix = ctx.pi() * ctx.real(x);
        ExtReal closed = logform ? log(pix / sin(pix)) : (1L - pix * cot(pix)) / 2L;
        return Routed{logform ? pair.second : pair.first, point(closed)};
      });
    });
  }

  const ClassicId ids[] = {ClassicId::tyler_chernoff, ClassicId::goldbach, ClassicId::log2,
                           ClassicId::one_minus_gamma};
  for (ClassicId id : ids) {
    std::string query = std::string("classic ") + classic_name(id);
    tasks.push_back([query, id, opt] {
      return two_route(query, opt.digits, [id](const NumericContext& ctx) {
        return Routed{classic_identity(id, ctx), point(classic_closed_form(id, ctx))};
      });
    });
  }

  tasks.push_back([opt] {
    return two_route("classic termwise-integration cross-check", opt.digits,
                     [](const NumericContext& ctx) {
                       return Routed{integrated_log_expansion(ctx),
                                     point(classic_closed_form(ClassicId::tyler_chernoff, ctx))};
                     });
  });
  return tasks;
}

std::vector<Task> dirichlet_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;

  const unsigned round_trip_q[] = {2, 3, 4, 5, 7, 8, 9, 12};
  for (unsigned q : round_trip_q) {
    for (unsigned p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (long s = 2; s <= 4; ++s) {
        std::string query = "dirichlet round-trip s=" + std::to_string(s) + " p/q=" +
                            std::to_string(p) + "/" + std::to_string(q);
        tasks.push_back([query, p, q, s, opt] {
          return two_route(query, opt.digits, [p, q, s](const NumericContext& ctx) {
            HurwitzReconstruction rec = hurwitz_from_characters(ctx.real(s), p, q, ctx);
            SeriesResult lhs;
            lhs.value = rec.value;
            lhs.error_bound = rec.error_bound;
            lhs.precision_bits = ctx.precision_bits();
            lhs.terms_used = 1;
            return Routed{lhs, hurwitz_zeta(ctx.real(s), mpq_class(p, q), ctx)};
          });
        });
      }
    }
  }

  for (unsigned q = 1; q <= 50; ++q) {
    std::string query = "dirichlet orthogonality q=" + std::to_string(q);
    tasks.push_back([query, q] {
      return exact_check(query, [q] {
        CharacterGroup g = characters_mod(q);
        if (g.characters.size() != g.phi) return false;
        size_t principals = 0;
        for (const auto& chi : g.characters) principals += chi.is_principal();
        if (principals != 1) return false;
        for (size_t i = 0; i < g.characters.size(); ++i)
          for (size_t j = 0; j < g.characters.size(); ++j)
            if (!orthogonal_exact(g.characters[i], g.characters[j])) return false;
        return true;
      });
    });
  }

  const unsigned mult_q[] = {5, 8, 9, 12, 24, 36, 40, 49};
  for (unsigned q : mult_q) {
    std::string query = "dirichlet multiplicativity q=" + std::to_string(q);
    tasks.push_back([query, q] {
      return exact_check(query, [q] {
        CharacterGroup g = characters_mod(q);
        for (const auto& chi : g.characters) {
          if (chi.exponent_at(1) != 0) return false;
          for (unsigned m = 0; m < q; ++m) {
            for (unsigned n = 0; n < q; ++n) {
              long em = chi.exponent_at(m), en = chi.exponent_at(n);
              long emn = chi.exponent_at(static_cast<unsigned long>(m) * n);
              if (em < 0 || en < 0) {
                if (emn >= 0) return false;
              } else if (emn != (em + en) % static_cast<long>(g.phi)) {
                return false;
              }
            }
          }
        }
        return true;
      });
    });
  }

  for (long s = 2; s <= 4; ++s) {
    std::string query = "dirichlet beta(s)=L(s,chi4) s=" + std::to_string(s);
    tasks.push_back([query, s, opt] {
      return two_route(query, opt.digits, [s](const NumericContext& ctx) {
        CharacterGroup g4 = characters_mod(4);
        const DirichletCharacter& odd =
            g4.characters[g4.characters[0].is_principal() ? 1 : 0];
        LValue l = l_function(ctx.real(s), odd, ctx);
        SeriesResult rhs;
        rhs.value = l.value.re();
        rhs.error_bound = l.error_bound + abs(l.value.im());
        rhs.precision_bits = ctx.precision_bits();
        rhs.terms_used = l.terms_used;
        return Routed{dirichlet_beta(ctx.real(s), ctx), rhs};
      });
    });
  }

  // Euler products truncated at 1e5; gate is the crude certified tail bound.
  struct EulerCase {
    const char* name;
    unsigned q;
    bool principal;
  };
  const EulerCase euler_cases[] = {{"euler-product zeta(2) q=1", 1, true},
                                   {"euler-product beta(2) q=4", 4, false}};
  for (const EulerCase& c : euler_cases) {
    std::string query = c.name;
    unsigned q = c.q;
    bool principal = c.principal;
    tasks.push_back([query, q, principal, opt] {
      Report rep;
      rep.query = query;
      try {
        NumericContext ctx(opt.digits);
        const unsigned long bound = 100000;
        ExtReal s = ctx.real(2L);
        CharacterGroup g = characters_mod(q);
        size_t pick = 0;
        for (size_t i = 0; i < g.characters.size(); ++i)
          if (g.characters[i].is_principal() == principal) {
            pick = i;
            break;
          }
        const DirichletCharacter& chi = g.characters[pick];
        ExtComplex prod = euler_product_check(s, chi, bound, ctx);
        LValue l = l_function(s, chi, ctx);
        ExtReal tail = euler_product_tail_bound(s, bound, ctx);
        ExtReal gap = abs(prod.re() - l.value.re()) + abs(prod.im() - l.value.im());
        bool ok = gap <= tail + l.error_bound;
        rep.value = prod.re().str();
        rep.error_bound = tail.str(8);
        rep.terms_used = static_cast<long>(bound);
        rep.precision_bits = ctx.precision_bits();
        rep.lhs = prod.re().str();
        rep.rhs = l.value.re().str();
        rep.status = ok ? Report::Status::ok : Report::Status::mismatch;
      } catch (const std::exception& e) {
        rep.status = Report::Status::error;
        rep.rhs = e.what();
      }
      return rep;
    });
  }
  return tasks;
}

}  // namespace

const std::vector<mpq_class>& theorem_grid_a() {
  static const std::vector<mpq_class> grid = {
      mpq_class(1, 6), mpq_class(1, 5), mpq_class(1, 4), mpq_class(1, 3), mpq_class(2, 5),
      mpq_class(1, 2), mpq_class(3, 5), mpq_class(2, 3), mpq_class(3, 4), mpq_class(9, 10)};
  return grid;
}

const std::vector<mpq_class>& hoffman_grid_a() {
  static const std::vector<mpq_class> grid = {mpq_class(1, 6), mpq_class(1, 5), mpq_class(1, 4),
                                              mpq_class(1, 3), mpq_class(2, 5), mpq_class(1, 2),
                                              mpq_class(2, 3), mpq_class(3, 4)};
  return grid;
}

std::vector<Report> run_suite(const std::string& suite, const VerifyOptions& opts) {
  std::vector<Task> tasks;
  if (suite == "theorem-grid") {
    tasks = theorem_tasks(opts);
  } else if (suite == "hoffman") {
    tasks = hoffman_tasks(opts);
  } else if (suite == "corollaries") {
    tasks = corollary_tasks(opts);
  } else if (suite == "classics") {
    tasks = classic_tasks(opts);
  } else if (suite == "dirichlet") {
    tasks = dirichlet_tasks(opts);
  } else if (suite == "all") {
    for (auto* fn : {theorem_tasks, hoffman_tasks, corollary_tasks, classic_tasks,
                     dirichlet_tasks}) {
      std::vector<Task> part = fn(opts);
      for (auto& t : part) tasks.push_back(std::move(t));
    }
  } else {
    throw DomainError("unknown suite: " + suite +
                      " (expected theorem-grid|hoffman|corollaries|classics|dirichlet|all)");
  }
  return run_tasks(tasks, opts.jobs);
}

bool all_ok(const std::vector<Report>& reports) {
  for (const Report& r : reports)
    if (r.status != Report::Status::ok) return false;
  return true;
}

}  // namespace zetakit
