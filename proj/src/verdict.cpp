#include "plbranch/verdict.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "plbranch/errors.hpp"
#include "plbranch/parser.hpp"

namespace plbranch {

namespace {

constexpr const char* kConjectureNote =
    "The k = 0 condition (p | betabar_0 = n) cannot be probed: the semigroup is only "
    "computed when p does not divide n.";

std::string num(std::int64_t v) { return std::to_string(v); }

bool p_divides_some_generator(const BranchReport& r, std::size_t from) {
  const auto& bb = r.semigroup->betabar;
  for (std::size_t k = from; k < bb.size(); ++k)
    if (bb[k] % r.p == 0) return true;
  return false;
}

std::string mu_text(const MilnorResult& mu) {
  return mu.is_finite() ? num(mu.value) : std::string(to_string(mu.status));
}

IntersectionValue from_dimension(const MilnorResult& d) {
  return {d.status, d.is_finite() ? d.value : 0, d.reason};
}

// Checks that depend only on the semigroup and the hypothesis flags.
void append_semigroup_checks(BranchReport& r) {
  if (!r.semigroup) return;
  for (auto& c : verify_structure(*r.semigroup)) r.checks.push_back(std::move(c));
  const auto& md = *r.merle;
  std::int64_t total = 0;
  for (auto o : md.orders) total += o;
  r.checks.push_back(make_check("polar_package_orders", total == r.n - 1,
                                "sum of package orders " + num(total) + " = ord f - 1 = " + num(r.n - 1)));
  if (!r.hypotheses.p_not_divides_n) {
    r.checks.push_back(not_applicable("polar_package_divisibility", "hypothesis p does not divide n fails"));
  } else {
    bool ok = true;
    for (std::size_t k = 0; k < md.orders.size(); ++k) ok = ok && md.orders[k] % md.moduli[k] == 0;
    r.checks.push_back(make_check("polar_package_divisibility", ok, "o_k = 0 mod n/e_{k-1} for every k"));
  }
  r.checks.push_back(not_applicable(
      "polar_factor_contacts",
      "unverified by tool: per-factor contact quotients and orders need the factorization of f_y "
      "over K[[x]]"));
}

void append_pipeline_checks(BranchReport& r) {
  if (r.polar_triple) {
    const auto& t = *r.polar_triple;
    r.checks.push_back(make_check("polar_sum_three_ways", t.all_equal(),
                                  "roots of unity " + num(t.roots_of_unity) + ", char. exponents " +
                                      num(t.char_exponents) + ", generators " + num(t.generators)));
  } else {
    r.checks.push_back(not_applicable("polar_sum_three_ways", "needs a parametrization"));
  }
  r.checks.push_back(check_lemma_conductor_polar(r));
  r.checks.push_back(check_lemma_inequality(r));
  for (auto& c : check_main_theorem(r)) r.checks.push_back(std::move(c));
  r.checks.push_back(check_milnor_lower_bound(r));
  r.conjecture = conjecture_probe(r);
}

std::optional<std::string> semigroup_gate(const BranchReport& r) {
  if (!r.semigroup) return "no semigroup: generators were not supplied";
  return std::nullopt;
}

}  // namespace

const Check* BranchReport::find_check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool BranchReport::all_checks_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

bool SweepResult::all_checks_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const BranchReport& r) { return r.all_checks_pass(); });
}

BranchReport analyze(const Parametrization& param, std::optional<int> max_degree) {
  BranchReport r;
  r.mode = InputMode::Param;
  r.p = param.p();
  r.n = param.n();
  r.hypotheses.p_not_divides_n = r.n % r.p != 0;
  r.hypotheses.p_greater_than_n = r.p > r.n;

  std::vector<std::int64_t> support;
  for (Exponent e : param.y().support()) support.push_back(e);
  r.y_support = support;

  const CharExponents ce = char_exponents(param);
  r.beta = ce.beta;
  r.semigroup = generators_from_char_exponents(ce);
  r.merle = merle_data(*r.semigroup);

  const BivarPoly F = implicitize(param);
  r.f = to_string(F);
  const Order i0 = intersection_order(param, partial_y(F));
  r.i0_f_fy = i0.is_finite() ? IntersectionValue{DimensionStatus::Finite, i0.value(), {}}
                             : IntersectionValue{DimensionStatus::Infinite, 0, "f_y vanishes on the branch"};
  r.polar_triple = polar_intersection_three_ways(param, ce, *r.semigroup);
  r.mu = milnor_number(F, max_degree.value_or(default_max_degree(r.semigroup->conductor)));

  append_semigroup_checks(r);
  append_pipeline_checks(r);
  return r;
}

BranchReport analyze_poly(const BivarPoly& input, std::optional<std::vector<std::int64_t>> generators,
                          std::optional<int> max_degree) {
  const Order ord = input.order();
  if (ord.is_infinite() || ord.value() < 2)
    throw InputError(ErrorKind::SmoothCurve, "f must have order >= 2 (a singular point at the origin)");
  const std::int64_t n = ord.value();

  // i0(f, x) = ord f(0, y), i0(f, y) = ord f(x, 0).
  auto axis_order = [](const BivarPoly& f) {
    Order o = Order::infinity();
    for (const auto& [m, c] : f.terms())
      if (m.x == 0) o = std::min(o, Order(m.y));
    return o;
  };
  BranchReport r;
  r.mode = InputMode::Poly;
  BivarPoly f = input;
  if (axis_order(f) != Order(n)) {
    if (axis_order(f.swapped()) == Order(n)) {
      f = f.swapped();
      r.hypotheses.swapped_xy = true;
    } else if (generators) {
      throw InputError(ErrorKind::NotABranch,
                       "neither axis is transversal to f; f is not unitangent, so not a branch");
    }
  }
  r.f = to_string(f);
  r.p = f.field().modulus();
  r.n = n;
  r.hypotheses.p_not_divides_n = r.n % r.p != 0;
  r.hypotheses.p_greater_than_n = r.p > r.n;

  if (generators) {
    r.semigroup = semigroup_from_generators(*generators);
    if (r.semigroup->betabar[0] != n)
      throw InputError(ErrorKind::InvalidGenerators, "first generator " + num(r.semigroup->betabar[0]) +
                                                         " differs from ord f = " + num(n));
    r.hypotheses.generators_user_asserted = true;
    r.merle = merle_data(*r.semigroup);
  }
  const int bound = max_degree.value_or(
      default_max_degree(r.semigroup ? std::optional<std::int64_t>(r.semigroup->conductor) : std::nullopt));
  r.mu = milnor_number(f, bound);
  if (r.semigroup) {
    r.i0_f_fy = from_dimension(local_dimension(f, partial_y(f), bound));
    append_semigroup_checks(r);
  }
  append_pipeline_checks(r);
  return r;
}

Check check_lemma_conductor_polar(const BranchReport& r) {
  const char* name = "conductor_polar";
  if (auto why = semigroup_gate(r)) return not_applicable(name, *why);
  if (!r.hypotheses.p_not_divides_n) return not_applicable(name, "hypothesis p does not divide n fails");
  if (!r.i0_f_fy || !r.i0_f_fy->is_finite()) return not_applicable(name, "i0(f, f_y) was not determined");
  const std::int64_t i0 = r.i0_f_fy->value;
  const std::int64_t expect = r.semigroup->conductor + r.n - 1;
  bool ok = i0 == expect;
  if (r.polar_triple) {
    const auto& t = *r.polar_triple;
    ok = ok && t.roots_of_unity == i0 && t.char_exponents == i0 && t.generators == i0;
  }
  return make_check(name, ok, "i0(f, f_y) = " + num(i0) + ", c + n - 1 = " + num(expect));
}

Check check_lemma_inequality(const BranchReport& r) {
  const char* name = "polar_inequality";
  if (auto why = semigroup_gate(r)) return not_applicable(name, *why);
  if (!r.hypotheses.p_greater_than_n) return not_applicable(name, "hypothesis p > n fails");
  if (!r.mu.is_finite()) return not_applicable(name, "mu is not finite");
  if (!r.i0_f_fy || !r.i0_f_fy->is_finite()) return not_applicable(name, "i0(f, f_y) was not determined");
  const std::int64_t i0 = r.i0_f_fy->value;
  const std::int64_t rhs = r.mu.value + r.n - 1;
  const bool coprime = !p_divides_some_generator(r, 1);
  const bool ok = i0 <= rhs && (i0 == rhs) == coprime;
  return make_check(name, ok,
                    "i0(f, f_y) = " + num(i0) + (i0 == rhs ? " = " : (i0 < rhs ? " < " : " > ")) +
                        "mu + n - 1 = " + num(rhs) + "; p divides some betabar_k (k >= 1): " +
                        (coprime ? "no" : "yes"));
}

std::vector<Check> check_main_theorem(const BranchReport& r) {
  std::vector<Check> out;
  const char* main_name = "main_theorem";
  const char* cor_name = "corollary";
  if (auto why = semigroup_gate(r)) {
    out.push_back(not_applicable(main_name, *why));
    out.push_back(not_applicable(cor_name, *why));
    return out;
  }
  const std::int64_t c = r.semigroup->conductor;
  const bool mu_is_c = r.mu.is_finite() && r.mu.value == c;

  if (!r.hypotheses.p_greater_than_n) {
    out.push_back(not_applicable(main_name, "hypothesis p > n fails"));
  } else if (!r.mu.is_finite()) {
    out.push_back(not_applicable(main_name, "mu is not finite"));
  } else {
    const bool coprime = !p_divides_some_generator(r, 1);
    out.push_back(make_check(main_name, mu_is_c == coprime,
                             std::string("mu = c: ") + (mu_is_c ? "yes" : "no") + " (mu = " + mu_text(r.mu) +
                                 ", c = " + num(c) + "); p divides no betabar_k (k >= 1): " +
                                 (coprime ? "yes" : "no")));
  }

  if (!r.hypotheses.p_not_divides_n) {
    out.push_back(not_applicable(cor_name, "hypothesis p does not divide n fails"));
  } else if (!r.mu.is_finite()) {
    out.push_back(not_applicable(cor_name, "mu is not finite"));
  } else if (!r.i0_f_fy || !r.i0_f_fy->is_finite()) {
    out.push_back(not_applicable(cor_name, "i0(f, f_y) was not determined"));
  } else {
    const bool teissier = r.i0_f_fy->value == r.mu.value + r.n - 1;
    out.push_back(make_check(cor_name, mu_is_c == teissier,
                             std::string("mu = c: ") + (mu_is_c ? "yes" : "no") +
                                 "; i0(f, f_y) = mu + n - 1: " + (teissier ? "yes" : "no")));
  }
  return out;
}

Check check_milnor_lower_bound(const BranchReport& r) {
  const char* name = "milnor_lower_bound";
  if (auto why = semigroup_gate(r)) return not_applicable(name, *why);
  const std::int64_t c = r.semigroup->conductor;
  switch (r.mu.status) {
    case DimensionStatus::Infinite:
      return make_check(name, true, "mu infinite >= c = " + num(c));
    case DimensionStatus::Unknown:
      return not_applicable(name, "mu is unknown");
    case DimensionStatus::Finite:
      break;
  }
  return make_check(name, r.mu.value >= c, "mu = " + num(r.mu.value) + " >= c = " + num(c));
}

ConjectureEvidence conjecture_probe(const BranchReport& r) {
  ConjectureEvidence ev;
  ev.note = kConjectureNote;
  ev.regime = r.hypotheses.p_greater_than_n ? "theorem" : "experimental";
  if (!r.semigroup || !r.hypotheses.p_not_divides_n) {
    ev.applicable = false;
    ev.outcome = "not-applicable";
    return ev;
  }
  ev.applicable = true;
  ev.predicate = !p_divides_some_generator(r, 0);
  switch (r.mu.status) {
    case DimensionStatus::Finite: ev.mu_equals_c = r.mu.value == r.semigroup->conductor; break;
    case DimensionStatus::Infinite: ev.mu_equals_c = false; break;
    case DimensionStatus::Unknown: break;
  }
  if (!ev.mu_equals_c) {
    ev.outcome = "inconclusive";
  } else {
    ev.outcome = *ev.mu_equals_c == ev.predicate ? "supporting" : "counter-evidence";
  }
  return ev;
}

namespace {

bool is_validation_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::PDividesN:
    case ErrorKind::OrderNotAboveN:
    case ErrorKind::NotPrimitive:
    case ErrorKind::SmoothCurve:
    case ErrorKind::NotABranch:
    case ErrorKind::InvalidGenerators:
      return true;
    default:
      return false;
  }
}

template <class Analyze>
SweepResult run_sweep(std::uint64_t lo, std::uint64_t hi, Analyze&& analyze_one) {
  if (hi > PrimeField::kMaxModulus) throw InputError(ErrorKind::InvalidArgument, "prime range exceeds 2^31");
  if (lo > hi) throw InputError(ErrorKind::InvalidArgument, "empty prime range");
  std::vector<std::uint32_t> primes;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (is_prime(q)) primes.push_back(static_cast<std::uint32_t>(q));

  struct Outcome {
    std::optional<BranchReport> report;
    std::optional<SkippedPrime> skipped;
  };
  std::vector<std::future<Outcome>> jobs;
  jobs.reserve(primes.size());
  for (auto q : primes) {
    jobs.push_back(std::async(std::launch::async, [q, &analyze_one]() -> Outcome {
      try {
        return {analyze_one(PrimeField(q)), std::nullopt};
      } catch (const InputError& e) {
        if (!is_validation_failure(e.kind())) throw;
        return {std::nullopt, SkippedPrime{q, std::string(to_string(e.kind())) + ": " + e.what()}};
      }
    }));
  }
  SweepResult result;
  for (auto& job : jobs) {
    Outcome o = job.get();
    if (o.report) result.rows.push_back(std::move(*o.report));
    if (o.skipped) result.skipped.push_back(std::move(*o.skipped));
  }
  return result;
}

}  // namespace

SweepResult sweep(const ParamTemplate& tmpl, std::uint64_t lo, std::uint64_t hi, std::optional<int> max_degree) {
  return run_sweep(lo, hi, [&](const PrimeField& F) {
    return analyze(validate(F, tmpl.n, parse_univar(tmpl.y_text, F)), max_degree);
  });
}

SweepResult sweep(const PolyTemplate& tmpl, std::uint64_t lo, std::uint64_t hi, std::optional<int> max_degree) {
  // Prime-independent problems with the list surface as errors, not skips.
  if (tmpl.generators) semigroup_from_generators(*tmpl.generators);
  return run_sweep(lo, hi, [&](const PrimeField& F) {
    return analyze_poly(parse_bivar(tmpl.f_text, F), tmpl.generators, max_degree);
  });
}

}  // namespace plbranch

namespace plbranch {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

}  // namespace plbranch
