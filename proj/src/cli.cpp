#include "zetakit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetakit/cotpoly.hpp"
#include "zetakit/dirichlet.hpp"
#include "zetakit/report.hpp"
#include "zetakit/series.hpp"
#include "zetakit/special.hpp"
#include "zetakit/verify.hpp"

namespace zetakit {

namespace {

class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

unsigned default_digits() {
  if (const char* env = std::getenv("ZETAKIT_PRECISION")) {
    try {
      long v = std::stol(env);
      if (v < static_cast<long>(NumericContext::kMinDecimalDigits) || v > 100000)
        throw DomainError("ZETAKIT_PRECISION out of range: " + std::string(env));
      return static_cast<unsigned>(v);
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("ZETAKIT_PRECISION is not a number: " + std::string(env));
    }
  }
  return 30;
}

bool looks_rational(const std::string& s) {
  return s.find('/') != std::string::npos ||
         (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
          s.find('E') == std::string::npos);
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("not a rational: " + s);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

struct EvalRequest {
  std::string series;
  std::string a;
  unsigned m = 0;
  std::string s;
  unsigned digits = 0;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

Report report_from(const std::string& query, const SeriesResult& r) {
  Report rep;
  rep.query = query;
  rep.value = r.value.str();
  rep.error_bound = r.error_bound.str(8);
  rep.terms_used = r.terms_used;
  rep.precision_bits = r.precision_bits;
  rep.status = Report::Status::ok;
  return rep;
}

Report cmd_eval(const EvalRequest& req, const NumericContext& ctx) {
  std::ostringstream q;
  q << "eval series=" << req.series;
  if (!req.a.empty()) q << " a=" << req.a;
  if (req.m) q << " m=" << req.m;
  if (!req.s.empty()) q << " s=" << req.s;
  q << " digits=" << ctx.decimal_digits();
  const std::string query = q.str();

  if (req.series == "theorem") {
    require(!req.a.empty() && req.m >= 1, "eval --series theorem needs --a and --m");
    BinomSeriesQuery bq = looks_rational(req.a)
                              ? BinomSeriesQuery::rational(parse_rational(req.a), req.m)
                              : BinomSeriesQuery::decimal(req.a, req.m, ctx);
    SeriesResult direct = binom_series_direct(bq, ctx.target_eps(), ctx);
    SeriesResult closed = binom_series_closed_result(bq, ctx);
    Report rep = report_from(bq.exact_a ? query : query + " (a inexact)", direct);
    rep.lhs = direct.value.str();
    rep.rhs = closed.value.str();
    ExtReal gap = abs(direct.value - closed.value);
    bool ok = gap <= direct.error_bound + closed.error_bound && gap <= ctx.tolerance();
    rep.status = ok ? Report::Status::ok : Report::Status::mismatch;
    return rep;
  }
  if (req.series == "half" || req.series == "quarter") {
    require(req.m >= 1, "eval --series " + req.series + " needs --m");
    ExtReal v = req.series == "half" ? corollary_half(req.m, ctx) : corollary_quarter(req.m, ctx);
    SeriesResult r;
    r.value = v;
    r.error_bound = v.ulp() * 256L;
    r.terms_used = 1;
    r.precision_bits = ctx.precision_bits();
    return report_from(query, r);
  }
  if (req.series.rfind("classic:", 0) == 0) {
    ClassicId id = classic_from_name(req.series.substr(8));
    SeriesResult lhs = classic_identity(id, ctx);
    ExtReal rhs = classic_closed_form(id, ctx);
    Report rep = report_from(query, lhs);
    rep.lhs = lhs.value.str();
    rep.rhs = rhs.str();
    ExtReal gap = abs(lhs.value - rhs);
    bool ok = gap <= lhs.error_bound + rhs.ulp() * 64L && gap <= ctx.tolerance();
    rep.status = ok ? Report::Status::ok : Report::Status::mismatch;
    return rep;
  }
  if (req.series == "hurwitz") {
    require(!req.s.empty() && !req.a.empty(), "eval --series hurwitz needs --s and --a");
    bool exact = looks_rational(req.a);
    mpq_class a = exact ? parse_rational(req.a) : ctx.parse(req.a).to_rational();
    return report_from(exact ? query : query + " (a inexact)",
                       hurwitz_zeta(ctx.parse(req.s), a, ctx));
  }
  if (req.series == "beta") {
    require(!req.s.empty(), "eval --series beta needs --s");
    return report_from(query, dirichlet_beta(ctx.parse(req.s), ctx));
  }
  if (req.series == "zeta") {
    require(!req.s.empty(), "eval --series zeta needs --s");
    return report_from(query, riemann_zeta(ctx.parse(req.s), ctx));
  }
  throw UsageError("unknown --series " + req.series +
                   " (theorem|half|quarter|classic:<id>|hurwitz|beta|zeta)");
}

std::string cotpoly_table_json(unsigned n_max) {
  // Hand-rolled so arbitrary-size integer coefficients stay exact literals.
  std::string out = "[";
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n) out += ",";
    out += "[";
    const IntPolynomial& p = cot_poly(n);
    for (unsigned k = 0; k <= p.degree(); ++k) {
      if (k) out += ",";
      out += p.coeff(k).get_str();
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string cotpoly_table_csv(unsigned n_max) {
  std::string out = "n,k,coefficient\n";
  for (unsigned n = 0; n <= n_max; ++n) {
    const IntPolynomial& p = cot_poly(n);
    for (unsigned k = 0; k <= p.degree(); ++k)
      out += std::to_string(n) + "," + std::to_string(k) + "," + p.coeff(k).get_str() + "\n";
  }
  return out;
}

std::string chars_table_json(unsigned q) {
  CharacterGroup g = characters_mod(q);
  nlohmann::json j;
  j["q"] = g.modulus;
  j["phi"] = g.phi;
  j["generators"] = g.generators;
  j["orders"] = g.factor_orders;
  nlohmann::json chars = nlohmann::json::array();
  for (size_t i = 0; i < g.characters.size(); ++i) {
    const DirichletCharacter& chi = g.characters[i];
    nlohmann::json values = nlohmann::json::array();
    for (unsigned r = 0; r < q; ++r) {
      long e = chi.exponent_at(r);
      if (e < 0) {
        values.push_back(0);  // the "0" marker for non-units
      } else {
        unsigned long num = static_cast<unsigned long>(e);
        unsigned long den = g.phi;
        unsigned long gg = std::gcd(num, den);
        if (num == 0) gg = den;  // 0/phi -> 0/1
        values.push_back(nlohmann::json::array({num / gg, den / gg}));
      }
    }
    chars.push_back({{"index", i}, {"values", values}});
  }
  j["characters"] = chars;
  return j.dump();
}

std::string chars_table_csv(unsigned q) {
  CharacterGroup g = characters_mod(q);
  std::string out = "character,residue,exponent_num,exponent_den,is_zero\n";
  for (size_t i = 0; i < g.characters.size(); ++i) {
    const DirichletCharacter& chi = g.characters[i];
    for (unsigned r = 0; r < q; ++r) {
      long e = chi.exponent_at(r);
      out += std::to_string(i) + "," + std::to_string(r) + ",";
      if (e < 0) {
        out += ",,1\n";
      } else {
        unsigned long num = static_cast<unsigned long>(e);
        unsigned long den = g.phi;
        unsigned long gg = std::gcd(num, den);
        if (num == 0) gg = den;
        out += std::to_string(num / gg) + "," + std::to_string(den / gg) + ",0\n";
      }
    }
  }
  return out;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rational zeta series toolkit: evaluate and cross-verify the identity suite"};
  app.require_subcommand(1);

  EvalRequest eval_req;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one series/identity, print a JSON report");
  eval->add_option("--series", eval_req.series,
                   "theorem|half|quarter|classic:<id>|hurwitz|beta|zeta")
      ->required();
  eval->add_option("--a", eval_req.a, "parameter a (p/q or decimal)");
  eval->add_option("--m", eval_req.m, "binomial lower index m >= 1");
  eval->add_option("--s", eval_req.s, "zeta argument s");
  eval->add_option("--digits", eval_req.digits, "working decimal digits (default 30)");

  std::string suite;
  unsigned verify_digits = 0, jobs = 1;
  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite, one JSON report per line");
  verify->add_option("--suite", suite, "theorem-grid|hoffman|corollaries|classics|dirichlet|all")
      ->required();
  verify->add_option("--digits", verify_digits, "working decimal digits (default 30)");
  verify->add_option("--jobs", jobs, "worker threads (default 1)");

  std::string what, format = "json", out_path;
  unsigned table_n = 0, table_q = 0;
  CLI::App* table = app.add_subcommand("table", "export coefficient/character tables");
  table->add_option("--what", what, "cotpoly|chars")->required();
  table->add_option("--n", table_n, "dump P_0..P_n (cotpoly)");
  table->add_option("--q", table_q, "character modulus (chars)");
  table->add_option("--format", format, "json|csv (default json)");
  table->add_option("--out", out_path, "output path (default stdout)");

  std::vector<char*> argv;
  std::string prog = "zetakit";
  argv.push_back(prog.data());
  for (std::string& s : args) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      NumericContext ctx(eval_req.digits ? eval_req.digits : default_digits());
      Report rep = cmd_eval(eval_req, ctx);
      out << rep.json_line() << "\n";
      return rep.status == Report::Status::ok ? 0 : 1;
    }

    if (*verify) {
      const std::set<std::string> known = {"theorem-grid", "hoffman",   "corollaries",
                                           "classics",     "dirichlet", "all"};
      if (!known.count(suite))
        throw UsageError("unknown --suite " + suite +
                         " (theorem-grid|hoffman|corollaries|classics|dirichlet|all)");
      VerifyOptions opts;
      opts.digits = verify_digits ? verify_digits : default_digits();
      opts.jobs = std::max(1u, jobs);
      std::vector<Report> reports = run_suite(suite, opts);
      size_t passed = 0;
      for (const Report& r : reports) {
        out << r.json_line() << "\n";
        passed += r.status == Report::Status::ok;
      }
      if (passed == reports.size()) {
        out << "PASSED " << passed << "/" << reports.size() << "\n";
        return 0;
      }
      out << "FAILED " << (reports.size() - passed) << "/" << reports.size() << "\n";
      return 1;
    }

    // table
    std::string payload;
    if (what == "cotpoly") {
      payload = format == "csv" ? cotpoly_table_csv(table_n) : cotpoly_table_json(table_n);
    } else if (what == "chars") {
      require(table_q >= 1, "table --what chars needs --q");
      payload = format == "csv" ? chars_table_csv(table_q) : chars_table_json(table_q);
    } else {
      throw UsageError("unknown --what " + what + " (cotpoly|chars)");
    }
    if (format != "json" && format != "csv") throw UsageError("unknown --format " + format);
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (out_path.empty()) {
      out << payload;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw IoError("cannot open for writing: " + out_path);
      f << payload;
      if (!f.good()) throw IoError("write failed: " + out_path);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 4;
  } catch (const VerificationError& e) {
    err << "verification mismatch: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const NonFiniteError& e) {
    err << "domain error (non-finite intermediate): " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace zetakit
