#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "multimom/numeric_moments.hpp"
#include "multimom/oracle.hpp"
#include "multimom/render.hpp"
#include "multimom/sampler.hpp"
#include "multimom/symbolic_moments.hpp"

namespace multimom::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<Rational> parse_probs(const std::string& text) {
  std::vector<Rational> probs;
  for (const std::string& token : split_commas(text)) {
    auto r = Rational::parse(token);
    if (!r) {
      throw std::invalid_argument("cannot parse probability \"" + token +
                                  "\"; expected a/b or an integer");
    }
    probs.push_back(*r);
  }
  return probs;
}

std::vector<unsigned> parse_uints(const std::string& text,
                                  const std::string& what) {
  std::vector<unsigned> values;
  for (const std::string& token : split_commas(text)) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("cannot parse " + what + " entry \"" +
                                  token +
                                  "\"; expected a non-negative integer");
    }
    unsigned long v = std::stoul(token);
    if (v > std::numeric_limits<unsigned>::max()) {
      throw std::invalid_argument(what + " entry " + token + " is too large");
    }
    values.push_back(static_cast<unsigned>(v));
  }
  return values;
}

RenderFormat parse_format(const std::string& text) {
  if (text == "text") return RenderFormat::text;
  if (text == "latex") return RenderFormat::latex;
  if (text == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown format \"" + text +
                              "\"; expected text, latex or json");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct MomentArgs {
  std::uint64_t m = 0;
  std::string x;
  std::string p;
  bool central = false;
  bool factorial = false;
  unsigned decimal = 0;
  bool decimal_set = false;
};

struct FormulaArgs {
  std::string p;
  bool central = false;
  std::string format = "text";
  std::string basis = "falling";
};

struct CatalogArgs {
  unsigned order = 0;
  bool central = false;
  std::string format = "text";
  std::string basis = "falling";
  bool paper_errata = false;
};

struct VerifyArgs {
  unsigned max_m = 6;
  std::string dims = "1,2,3";
  unsigned order = 6;
};

struct SampleArgs {
  std::uint64_t m = 0;
  std::string x;
  std::string p;
  bool central = false;
  std::uint64_t n = 1000000;
  std::uint64_t seed = 0;
  std::string format = "text";
};

int run_moment(const MomentArgs& a, std::ostream& out) {
  if (a.central && a.factorial) {
    throw std::invalid_argument("--central and --factorial are exclusive");
  }
  MultinomialParams params(Integer(static_cast<unsigned long>(a.m)),
                           parse_probs(a.x));
  MultiIndex p(parse_uints(a.p, "--p"));
  Rational value = a.central     ? central_moment(params, p)
                   : a.factorial ? factorial_moment(params, p)
                                 : noncentral_moment(params, p);
  out << value.str() << "\n";
  if (a.decimal_set) {
    out << "approx " << value.decimal(a.decimal) << "\n";
  }
  return 0;
}

int run_formula(const FormulaArgs& a, std::ostream& out) {
  Pattern pattern(parse_uints(a.p, "--p"));
  MomentPoly poly =
      a.central ? symbolic_central(pattern) : symbolic_noncentral(pattern);
  RenderFormat format = parse_format(a.format);
  if (a.basis == "ordinary") {
    out << render(to_ordinary(poly), format) << "\n";
  } else if (a.basis == "falling") {
    out << render(poly, format) << "\n";
  } else {
    throw std::invalid_argument("unknown basis \"" + a.basis +
                                "\"; expected falling or ordinary");
  }
  return 0;
}

int run_catalog(const CatalogArgs& a, std::ostream& out) {
  if (a.paper_errata) {
    for (const TableErratum& e : reference_table_errata()) {
      out << e.pattern.str() << ": printed \"" << e.printed
          << "\", should read \"" << e.corrected << "\"\n";
    }
    return 0;
  }
  if (a.order == 0) {
    throw std::invalid_argument("--order must be at least 1");
  }
  RenderFormat format = parse_format(a.format);
  const bool ordinary = a.basis == "ordinary";
  if (!ordinary && a.basis != "falling") {
    throw std::invalid_argument("unknown basis \"" + a.basis +
                                "\"; expected falling or ordinary");
  }
  for (const auto& [pattern, poly] : catalog(a.order, a.central)) {
    std::string body = ordinary ? render(to_ordinary(poly), format)
                                : render(poly, format);
    if (format == RenderFormat::json) {
      out << body << "\n";  // JSON lines carry the pattern themselves
    } else {
      out << pattern.str() << ": " << body << "\n";
    }
  }
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<unsigned> dims = parse_uints(a.dims, "--dims");
  auto reports = verify_sweep(a.max_m, dims, a.order);
  std::size_t failures = 0;
  for (const OracleReport& r : reports) {
    out << to_json_line(r) << "\n";
    if (!r.pass) ++failures;
  }
  if (failures > 0) {
    err << failures << " of " << reports.size() << " cases FAILED\n";
    return 2;
  }
  err << "cross-checked " << reports.size() << " cases: all pass\n";
  return 0;
}

int run_sample(const SampleArgs& a, std::ostream& out) {
  MultinomialParams params(Integer(static_cast<unsigned long>(a.m)),
                           parse_probs(a.x));
  MultiIndex p(parse_uints(a.p, "--p"));
  MonteCarloEstimate est =
      sample_moment(params, p,
                    a.central ? MomentKind::central : MomentKind::noncentral,
                    a.n, a.seed);
  if (a.format == "json") {
    out << "{\"mean\":" << format_double(est.mean)
        << ",\"se\":" << format_double(est.standard_error)
        << ",\"n\":" << est.n_samples << ",\"seed\":" << est.seed << "}\n";
  } else if (a.format == "text") {
    out << "mean=" << format_double(est.mean)
        << " se=" << format_double(est.standard_error)
        << " n=" << est.n_samples << " seed=" << est.seed << "\n";
  } else {
    throw std::invalid_argument("unknown format \"" + a.format +
                                "\"; expected text or json");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact multinomial moment calculator"};
  app.require_subcommand(0, 1);

  MomentArgs moment_args;
  auto* moment = app.add_subcommand(
      "moment", "Evaluate a moment exactly for concrete parameters");
  moment->add_option("--m", moment_args.m, "Number of trials")->required();
  moment
      ->add_option("--x", moment_args.x,
                   "Probabilities, comma-separated rationals (e.g. 1/4,1/3)")
      ->required();
  moment
      ->add_option("--p", moment_args.p,
                   "Exponents, comma-separated non-negative integers")
      ->required();
  moment->add_flag("--central", moment_args.central,
                   "Moment about the mean instead of the raw moment");
  moment->add_flag("--factorial", moment_args.factorial,
                   "Factorial moment instead of the raw moment");
  auto* decimal_opt = moment->add_option(
      "--decimal", moment_args.decimal,
      "Also print a decimal approximation with this many digits");

  FormulaArgs formula_args;
  auto* formula = app.add_subcommand(
      "formula", "Print the closed-form moment for an exponent pattern");
  formula
      ->add_option("--p", formula_args.p,
                   "Pattern, comma-separated positive integers")
      ->required();
  formula->add_flag("--central", formula_args.central,
                    "Central instead of raw moment");
  formula->add_option("--format", formula_args.format,
                      "Output format: text, latex or json");
  formula->add_option("--basis", formula_args.basis,
                      "Grade m by falling factorials or ordinary powers");

  CatalogArgs catalog_args;
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "Print closed forms for every pattern up to a total order");
  catalog_cmd->add_option("--order", catalog_args.order,
                          "Largest total order to list");
  catalog_cmd->add_flag("--central", catalog_args.central,
                        "Central instead of raw moments");
  catalog_cmd->add_option("--format", catalog_args.format,
                          "Output format: text, latex or json");
  catalog_cmd->add_option("--basis", catalog_args.basis,
                          "Grade m by falling factorials or ordinary powers");
  catalog_cmd->add_flag(
      "--paper-errata", catalog_args.paper_errata,
      "Print the known misprints in the printed order-8 reference table");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check the closed forms against brute-force enumeration");
  verify->add_option("--max-m", verify_args.max_m, "Largest trial count");
  verify->add_option("--dims", verify_args.dims,
                     "Dimensions to sweep, comma-separated");
  verify->add_option("--order", verify_args.order, "Largest total order");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand(
      "sample", "Monte Carlo estimate of a moment from seeded draws");
  sample->add_option("--m", sample_args.m, "Number of trials")->required();
  sample
      ->add_option("--x", sample_args.x,
                   "Probabilities, comma-separated rationals")
      ->required();
  sample
      ->add_option("--p", sample_args.p,
                   "Exponents, comma-separated non-negative integers")
      ->required();
  sample->add_flag("--central", sample_args.central,
                   "Center each coordinate at its exact mean");
  sample->add_option("--n", sample_args.n, "Number of draws (default 10^6)");
  sample->add_option("--seed", sample_args.seed, "Generator seed");
  sample->add_option("--format", sample_args.format,
                     "Output format: text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }
  moment_args.decimal_set = decimal_opt->count() > 0;

  try {
    if (moment->parsed()) return run_moment(moment_args, out);
    if (formula->parsed()) return run_formula(formula_args, out);
    if (catalog_cmd->parsed()) return run_catalog(catalog_args, out);
    if (verify->parsed()) return run_verify(verify_args, out, err);
    if (sample->parsed()) return run_sample(sample_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  out << app.help();
  return 0;
}

}  // namespace multimom::cli
