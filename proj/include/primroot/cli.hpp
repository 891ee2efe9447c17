#pragma once

#include <cmath>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primroot/arith.hpp"
#include "primroot/artin.hpp"
#include "primroot/charsum.hpp"
#include "primroot/factorize.hpp"
#include "primroot/output.hpp"
#include "primroot/primroot.hpp"
#include "primroot/special_primes.hpp"

namespace primroot::cli {

using output::OutputRecord;
using output::Row;
using output::Value;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline Value opt(const std::optional<Natural>& v) {
  return v ? Value{*v} : Value{};
}
inline Value opt(const std::optional<double>& v) {
  return v ? Value{*v} : Value{};
}

inline Natural natural(Natural v, const char* name) {
  require(v <= kNaturalCeiling,
          std::string("--") + name + " exceeds the 2^63-1 ceiling");
  return v;
}

inline Row interval_row(const IntervalDecomposition& d) {
  return {{"z", d.z},
          {"q", d.q},
          {"prime_count", d.prime_count},
          {"psi_sum", d.psi_sum},
          {"trivial_term", d.trivial_term},
          {"error_term", d.error_term},
          {"li_prediction", d.li_prediction},
          {"normalized_error", d.normalized_error()}};
}

}  // namespace detail

/// Parses argv (program name first), runs one subcommand and writes its
/// OutputRecord to `out`. Diagnostics and progress go to `err`.
inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Primitive roots, characteristic functions and Artin densities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "csv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  OutputRecord record;
  std::function<void()> action;

  Natural u = 0, n = 0, p = 0, q = 0, f = 0, k = 0, z = 0, x = 0;
  Natural limit = 0, cutoff = 0, cap = 100'000, qmin = 0, qmax = 0;
  Natural zmin = 0, zmax = 0, steps = 8;
  unsigned nmax = 0, s = 0, threads = 1;
  std::optional<Natural> tau;
  std::optional<double> power_c;
  std::string method = "divisor";
  bool literal = false;

  auto* order = app.add_subcommand("order", "Multiplicative order of u mod n");
  order->add_option("--u", u)->required();
  order->add_option("--n", n)->required();
  order->callback([&] {
    action = [&] {
      const auto r = multiplicative_order(detail::natural(u, "u"),
                                          detail::natural(n, "n"));
      record.parameters = {{"u", u}, {"n", n}};
      record.rows.push_back({{"n", r.n},
                             {"u", r.u},
                             {"order", r.order},
                             {"lambda", r.group_exponent},
                             {"primitive", r.is_lambda_primitive}});
    };
  });

  auto* isprim = app.add_subcommand("is-primroot", "Primitive-root test mod a prime");
  isprim->add_option("--u", u)->required();
  isprim->add_option("--p", p)->required();
  isprim->callback([&] {
    action = [&] {
      const PrimeRootTester test(detail::natural(p, "p"));
      const bool primitive = test(detail::natural(u, "u"));
      record.parameters = {{"u", u}, {"p", p}};
      record.rows.push_back({{"u", u},
                             {"p", p},
                             {"primitive", primitive},
                             {"exponentiations", test.exponentiations()}});
    };
  });

  auto* lift = app.add_subcommand("lift", "Primitive-root lift to composite n");
  lift->add_option("--u", u)->required();
  lift->add_option("--n", n)->required();
  lift->callback([&] {
    action = [&] {
      const auto fn = factor(detail::natural(n, "n"));
      const bool lifted = lift_primitive_root(detail::natural(u, "u"), fn);
      record.parameters = {{"u", u}, {"n", n}};
      record.rows.push_back({{"u", u},
                             {"n", n},
                             {"lambda", carmichael_lambda(fn)},
                             {"prime_powers", omega(fn)},
                             {"lifted", lifted}});
    };
  });

  auto* germain = app.add_subcommand("germain", "List generalized Germain primes");
  germain->add_option("--limit", limit)->required();
  auto* s_opt = germain->add_option("--s", s, "Restrict to one power of two");
  germain->callback([&] {
    action = [&] {
      std::optional<unsigned> only;
      if (s_opt->count() > 0) only = s;
      const auto forms = germain_primes(detail::natural(limit, "limit"), only);
      record.parameters = {{"limit", limit}};
      if (only) record.parameters.emplace_back("s", Natural{*only});
      for (const auto& g : forms) {
        record.rows.push_back({{"p", g.p}, {"s", Natural{g.s}}, {"r", g.r}});
      }
      record.summary = {{"count", Natural{forms.size()}}};
    };
  });

  auto* gtest = app.add_subcommand("germain-test", "Two-exponentiation test");
  gtest->add_option("--q", q)->required();
  gtest->add_option("--p", p)->required();
  gtest->callback([&] {
    action = [&] {
      const auto form = germain_decompose(detail::natural(p, "p"));
      require(form.has_value(),
              "germain-test: p = " + std::to_string(p) +
                  " is not of the form 2^s * r + 1 with r an odd prime");
      const bool primitive =
          germain_primitive_root_test(detail::natural(q, "q"), *form);
      record.parameters = {{"q", q}, {"p", p}};
      record.rows.push_back(
          {{"q", q},
           {"p", p},
           {"s", Natural{form->s}},
           {"r", form->r},
           {"primitive", primitive},
           {"exponentiations", Natural{2}},
           {"generic_exponentiations", PrimeRootTester(p).exponentiations()}});
    };
  });

  auto* ftest = app.add_subcommand("fermat-test", "Nonresidue test mod a Fermat prime");
  ftest->add_option("--q", q)->required();
  ftest->add_option("--f", f)->required();
  ftest->callback([&] {
    action = [&] {
      const bool primitive =
          fermat_primitive_root_test(detail::natural(q, "q"), detail::natural(f, "f"));
      record.parameters = {{"q", q}, {"f", f}};
      record.rows.push_back(
          {{"q", q},
           {"f", f},
           {"jacobi", std::int64_t{to_int(jacobi(static_cast<std::int64_t>(q % f), f))}},
           {"primitive", primitive}});
    };
  });

  auto* k2n = app.add_subcommand("k2n", "Primes of the form k*2^n+1");
  k2n->add_option("--k", k)->required();
  k2n->add_option("--nmax", nmax)->required();
  k2n->callback([&] {
    action = [&] {
      const auto e = enumerate_k_pow2_primes(detail::natural(k, "k"), nmax);
      record.parameters = {{"k", k}, {"nmax", Natural{nmax}}};
      for (const auto& kp : e.primes) {
        record.rows.push_back({{"n", Natural{kp.n}}, {"p", kp.p}});
      }
      record.summary = {
          {"count", Natural{e.primes.size()}},
          {"cutoff_n", e.cutoff ? Value{Natural{*e.cutoff}} : Value{}}};
    };
  });

  auto* psi = app.add_subcommand("psi", "Primitive-root indicator via character sums");
  psi->add_option("--u", u)->required();
  psi->add_option("--p", p)->required();
  psi->add_option("--method", method)->check(CLI::IsMember({"divisor", "free"}));
  psi->add_option("--tau", tau, "Base primitive root (default: least)");
  psi->add_flag("--literal", literal, "Evaluate every exponential literally");
  psi->callback([&] {
    action = [&] {
      const CharacterContext ctx(detail::natural(p, "p"), tau);
      const auto e = method == "divisor"
                         ? psi_divisor_dependent(detail::natural(u, "u"), ctx)
                         : psi_divisor_free(detail::natural(u, "u"), ctx, literal);
      record.parameters = {{"u", u}, {"p", p}, {"method", method},
                           {"literal", literal}};
      record.rows.push_back({{"p", e.p},
                             {"u", e.u},
                             {"tau", e.tau},
                             {"method", std::string(to_string(e.method))},
                             {"value", std::int64_t{e.value}},
                             {"raw_re", e.raw.real()},
                             {"raw_im", e.raw.imag()},
                             {"residual", e.residual}});
    };
  });

  auto* interval = app.add_subcommand("interval", "Main/error term split over [z, 2z]");
  interval->add_option("--z", z)->required();
  interval->add_option("--q", q)->required();
  interval->callback([&] {
    action = [&] {
      const auto d = decompose_interval(detail::natural(z, "z"), detail::natural(q, "q"));
      record.parameters = {{"z", z}, {"q", q}};
      record.rows.push_back(detail::interval_row(d));
      record.summary = {{"identity_defect", d.identity_defect()}};
    };
  });

  auto* trend = app.add_subcommand("error-trend",
                                   "Interval decompositions on a geometric z grid");
  trend->add_option("--q", q)->required();
  trend->add_option("--zmin", zmin)->required();
  trend->add_option("--zmax", zmax)->required();
  trend->add_option("--steps", steps);
  trend->callback([&] {
    action = [&] {
      require(zmin >= 3 && zmin <= zmax, "error-trend: need 3 <= zmin <= zmax");
      require(steps >= 1, "error-trend: steps must be >= 1");
      record.parameters = {{"q", q}, {"zmin", zmin}, {"zmax", zmax}, {"steps", steps}};
      Natural previous = 0;
      for (Natural i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        const auto zi = static_cast<Natural>(std::llround(
            static_cast<double>(zmin) *
            std::pow(static_cast<double>(zmax) / static_cast<double>(zmin), t)));
        if (zi == previous) continue;
        previous = zi;
        err << "error-trend: z = " << zi << '\n';
        record.rows.push_back(detail::interval_row(decompose_interval(zi, q)));
      }
    };
  });

  auto* artin = app.add_subcommand("artin-constant", "Truncated Euler product");
  artin->add_option("--cutoff", cutoff)->required();
  artin->callback([&] {
    action = [&] {
      const auto a = artin_constant(detail::natural(cutoff, "cutoff"));
      record.parameters = {{"cutoff", cutoff}};
      record.rows.push_back(
          {{"cutoff", a.truncation}, {"value", a.value}, {"tail_bound", a.tail_bound}});
    };
  });

  auto* density = app.add_subcommand("density", "pi(x), pi_q(x) and their ratio");
  density->add_option("--q", q)->required();
  density->add_option("--x", x)->required();
  density->add_option("--threads", threads)->check(CLI::PositiveNumber);
  density->callback([&] {
    action = [&] {
      const auto r = prime_counts(detail::natural(q, "q"), detail::natural(x, "x"), threads);
      record.parameters = {{"q", q}, {"x", x}};
      record.rows.push_back({{"q", r.q},
                             {"x", r.x},
                             {"pi_x", r.pi_x},
                             {"pi_q_x", r.pi_q_x},
                             {"density", r.density},
                             {"artin_reference", r.artin_reference},
                             {"correction_estimate", r.correction_estimate}});
    };
  });

  auto* least = app.add_subcommand("least-prime", "Least prime with q as primitive root");
  least->add_option("--q", q)->required();
  least->add_option("--cap", cap);
  least->callback([&] {
    action = [&] {
      const auto r = least_prime_with_primitive_root(detail::natural(q, "q"),
                                                     detail::natural(cap, "cap"));
      record.parameters = {{"q", q}, {"cap", cap}};
      record.rows.push_back(
          {{"q", r.q},
           {"least_p", detail::opt(r.prime)},
           {"cap", r.cap},
           {"exhausted", r.exhausted()},
           {"germain_hit", r.prime && germain_decompose(*r.prime).has_value()}});
    };
  });

  auto* scan = app.add_subcommand("scan", "Least-prime scan against (log q)(log log q)^3");
  scan->add_option("--qmin", qmin)->required();
  scan->add_option("--qmax", qmax)->required();
  scan->add_option("--cap", cap);
  scan->add_option("--threads", threads)->check(CLI::PositiveNumber);
  scan->add_option("--c", power_c, "Also report least_p / (log q)^c");
  scan->callback([&] {
    action = [&] {
      err << "scan: q in [" << qmin << ", " << qmax << "], cap " << cap << '\n';
      const auto result =
          conjecture_scan(detail::natural(qmin, "qmin"), detail::natural(qmax, "qmax"),
                          detail::natural(cap, "cap"), threads, power_c);
      record.parameters = {{"qmin", qmin}, {"qmax", qmax}, {"cap", cap}};
      if (power_c) record.parameters.emplace_back("c", *power_c);
      for (const auto& r : result.records) {
        record.rows.push_back({{"q", r.q},
                               {"least_p", detail::opt(r.least_p)},
                               {"bound_value", detail::opt(r.bound_value)},
                               {"ratio", detail::opt(r.ratio)},
                               {"germain_hit", r.germain_hit}});
      }
      const auto& sm = result.summary;
      record.summary = {{"records", sm.records},
                        {"exhausted", sm.exhausted},
                        {"max_ratio", detail::opt(sm.max_ratio)},
                        {"max_ratio_q", detail::opt(sm.max_ratio_q)},
                        {"max_least_p", sm.max_least_p},
                        {"germain_fraction", sm.germain_fraction}};
      if (power_c) {
        record.summary.emplace_back("max_log_power_ratio",
                                    detail::opt(sm.max_log_power_ratio));
      }
      err << "scan: " << sm.records << " bases, " << sm.exhausted << " exhausted\n";
    };
  });

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CeilingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  record.command = app.get_subcommands().front()->get_name();
  if (format == "json") {
    output::write_json(out, record);
  } else {
    output::write_csv(out, record);
  }
  return kExitOk;
}

}  // namespace primroot::cli
