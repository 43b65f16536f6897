#include "plbranch/cli.hpp"

#include <charconv>
#include <iostream>

#include "CLI11.hpp"
#include "plbranch/errors.hpp"
#include "plbranch/parser.hpp"
#include "plbranch/report_io.hpp"

namespace plbranch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_integer(std::string_view s, const char* what) {
  s = trim(s);
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError(ErrorKind::Syntax, std::string("expected an integer for ") + what + ", got \"" +
                                            std::string(s) + "\"");
  return v;
}

void emit_conjecture_lines(const BranchReport& r, std::ostream& out) {
  if (r.conjecture.outcome == "counter-evidence") {
    out << "EVIDENCE: counter-evidence to the conjecture at p = " << r.p
        << " (predicate " << (r.conjecture.predicate ? "true" : "false") << ", mu = c "
        << (*r.conjecture.mu_equals_c ? "true" : "false") << ", regime " << r.conjecture.regime << ")\n";
  }
}

BranchReport analyze_instance(const InputSpec& spec, std::uint64_t p) {
  const PrimeField field(p);
  if (spec.param_mode()) {
    const UnivarPoly y = parse_univar(spec.y_text, field);
    return analyze(validate(field, *spec.n, y), spec.max_degree);
  }
  return analyze_poly(parse_bivar(*spec.f_text, field), spec.generators, spec.max_degree);
}

SweepResult sweep_instances(const InputSpec& spec) {
  const auto [lo, hi] = *spec.primes;
  if (spec.param_mode()) return sweep(ParamTemplate{*spec.n, spec.y_text}, lo, hi, spec.max_degree);
  return sweep(PolyTemplate{*spec.f_text, spec.generators}, lo, hi, spec.max_degree);
}

int execute(const InputSpec& spec, std::ostream& out) {
  const bool json = spec.format == OutputFormat::Json;
  if (spec.command == "analyze") {
    if (!spec.p) throw InputError(ErrorKind::InvalidArgument, "analyze needs --p");
    if (spec.primes) throw InputError(ErrorKind::InvalidArgument, "analyze takes --p, not --primes");
    const BranchReport r = analyze_instance(spec, *spec.p);
    if (json)
      out << to_json(r).dump(2) << '\n';
    else
      out << render_text(r);
    if (!json) emit_conjecture_lines(r, out);
    return r.all_checks_pass() ? kExitOk : kExitCheckFailed;
  }

  if (spec.command == "sweep") {
    if (!spec.primes) throw InputError(ErrorKind::InvalidArgument, "sweep needs --primes lo..hi");
    if (spec.p) throw InputError(ErrorKind::InvalidArgument, "sweep takes --primes, not --p");
    const SweepResult s = sweep_instances(spec);
    if (json)
      out << to_json(s, spec.primes->first, spec.primes->second).dump(2) << '\n';
    else
      out << render_text(s);
    if (!json)
      for (const auto& r : s.rows) emit_conjecture_lines(r, out);
    return s.all_checks_pass() ? kExitOk : kExitCheckFailed;
  }

  // conjecture
  if (spec.p.has_value() == spec.primes.has_value())
    throw InputError(ErrorKind::InvalidArgument, "conjecture needs exactly one of --p or --primes");
  SweepResult s;
  if (spec.p) {
    s.rows.push_back(analyze_instance(spec, *spec.p));
  } else {
    s = sweep_instances(spec);
  }
  if (json) {
    Json rows = Json::array();
    for (const auto& r : s.rows) {
      const Json full = to_json(r);
      Json row;
      for (const char* k : {"p", "n", "beta_bar", "conductor", "mu", "hypotheses", "conjecture_evidence"})
        row[k] = full.at(k);
      rows.push_back(row);
    }
    Json skipped = Json::array();
    for (const auto& k : s.skipped) skipped.push_back({{"p", k.p}, {"reason", k.reason}});
    out << Json{{"instances", rows}, {"skipped", skipped}}.dump(2) << '\n';
  } else {
    for (const auto& r : s.rows) {
      const auto& ev = r.conjecture;
      out << "p = " << r.p << "  n = " << r.n << "  conductor = "
          << (r.semigroup ? std::to_string(r.semigroup->conductor) : "-") << "  mu = "
          << (r.mu.is_finite() ? std::to_string(r.mu.value) : std::string(to_string(r.mu.status)))
          << "  outcome = " << ev.outcome;
      if (ev.applicable) {
        out << "  (regime " << ev.regime << ", predicate " << (ev.predicate ? "true" : "false") << ", mu_equals_c "
            << (ev.mu_equals_c ? (*ev.mu_equals_c ? "true" : "false") : "unknown") << ")";
      }
      out << '\n';
    }
    for (const auto& k : s.skipped) out << "skipped p = " << k.p << ": " << k.reason << '\n';
    if (!s.rows.empty()) out << "note: " << s.rows.front().conjecture.note << '\n';
    for (const auto& r : s.rows) emit_conjecture_lines(r, out);
  }
  return s.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::pair<std::int64_t, std::string> split_param(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw InputError(ErrorKind::Syntax, "--param expects \"<n>; <y(t)>\", got \"" + std::string(text) + "\"");
  const auto n = parse_integer<std::int64_t>(text.substr(0, semi), "n in --param");
  const auto y = trim(text.substr(semi + 1));
  if (y.empty()) throw InputError(ErrorKind::Syntax, "--param is missing y(t) after ';'");
  return {n, std::string(y)};
}

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos)
    throw InputError(ErrorKind::Syntax, "--primes expects \"<lo>..<hi>\", got \"" + std::string(text) + "\"");
  const auto lo = parse_integer<std::uint64_t>(text.substr(0, dots), "--primes lower bound");
  const auto hi = parse_integer<std::uint64_t>(text.substr(dots + 2), "--primes upper bound");
  if (lo > hi) throw InputError(ErrorKind::InvalidArgument, "--primes range " + std::string(text) + " is empty");
  return {lo, hi};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of plane branches over prime fields: semigroup, conductor, Milnor number, "
               "polar intersections, and the checks relating them."};
  app.name("plbranch");
  app.require_subcommand(1);

  std::optional<std::uint64_t> p;
  std::string param_text, poly_text, primes_text, format = "text";
  std::vector<std::int64_t> generators;
  std::optional<int> max_degree;

  auto add_common = [&](CLI::App* sub, bool single_prime, bool prime_range) {
    if (single_prime) sub->add_option("--p", p, "prime characteristic");
    if (prime_range) sub->add_option("--primes", primes_text, "inclusive prime range lo..hi");
    auto* param = sub->add_option("--param", param_text, "parametrization \"<n>; <y(t)>\"");
    auto* poly = sub->add_option("--poly", poly_text, "series f(x,y)");
    param->excludes(poly);
    poly->excludes(param);
    sub->add_option("--generators", generators, "asserted semigroup generators for --poly")
        ->delimiter(',')
        ->needs(poly);
    sub->add_option("--dmax", max_degree, "truncation degree bound for the Milnor computation")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  add_common(app.add_subcommand("analyze", "analyze one instance"), true, false);
  add_common(app.add_subcommand("sweep", "analyze a template over a prime range"), false, true);
  add_common(app.add_subcommand("conjecture", "probe the conjecture on one prime or a range"), true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    InputSpec spec;
    spec.command = app.get_subcommands().front()->get_name();
    spec.p = p;
    spec.max_degree = max_degree;
    spec.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (!primes_text.empty()) spec.primes = parse_prime_range(primes_text);
    if (!poly_text.empty()) {
      spec.f_text = poly_text;
      if (!generators.empty()) spec.generators = generators;
    } else if (!param_text.empty()) {
      auto [n, y] = split_param(param_text);
      spec.n = n;
      spec.y_text = std::move(y);
    } else {
      throw InputError(ErrorKind::InvalidArgument, "one of --param or --poly is required");
    }
    return execute(spec, out);
  } catch (const InputError& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("plbranch");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace plbranch
