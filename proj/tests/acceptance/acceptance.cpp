// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plbranch/errors.hpp"
#include "plbranch/milnor.hpp"
#include "plbranch/parser.hpp"
#include "plbranch/report_io.hpp"
#include "plbranch/verdict.hpp"
#include "support/oracles.hpp"

using namespace plbranch;

namespace {

using V = std::vector<std::int64_t>;

struct Criterion {
  std::string id;
  std::string title;
  std::function<std::string()> body;  // empty string on success, else the reason
};

BranchReport param_report(std::uint64_t p, std::int64_t n, const char* y) {
  const PrimeField F(p);
  return analyze(validate(F, n, parse_univar(y, F)));
}

BranchReport poly_report(std::uint64_t p, const char* f, std::optional<V> gens) {
  const PrimeField F(p);
  return analyze_poly(parse_bivar(f, F), std::move(gens));
}

std::string mu_text(const MilnorResult& m) {
  return m.is_finite() ? std::to_string(m.value) : std::string(to_string(m.status));
}

std::string ac1() {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19}) {
    const auto r = param_report(p, 4, "t^6 + t^7");
    if (!r.semigroup || r.semigroup->betabar != V{4, 6, 13} || r.semigroup->conductor != 16 ||
        r.semigroup->delta != 8)
      return "semigroup data wrong at p = " + std::to_string(p);
    if (r.beta != V{4, 6, 7}) return "characteristic exponents wrong at p = " + std::to_string(p);
  }
  return {};
}

std::string ac2() {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19}) {
    const auto r = poly_report(p, "(y^2 + x^3)^2 + x^5*y", V{4, 6, 13});
    const std::int64_t want = p == 13 ? 17 : 16;
    if (!r.mu.is_finite() || r.mu.value != want)
      return "mu = " + mu_text(r.mu) + " at p = " + std::to_string(p);
    const Check* mt = r.find_check("main_theorem");
    if (!mt || mt->status != CheckStatus::Pass) return "main theorem check at p = " + std::to_string(p);
  }
  return {};
}

std::string ac3() {
  struct Case {
    std::uint64_t p;
    std::int64_t n;
    const char* y;
    std::int64_t want;
  };
  for (const Case& c : {Case{5, 4, "t^6 + t^7", 19}, Case{5, 2, "t^3", 3}, Case{7, 4, "t^6 + t^9", 21}}) {
    const PrimeField F(c.p);
    const auto prm = validate(F, c.n, parse_univar(c.y, F));
    const Order pulled = intersection_order(prm, partial_y(implicitize(prm)));
    if (pulled != Order(c.want)) return std::string("pullback order for ") + c.y + " is " + to_string(pulled);
    const auto r = analyze(prm);
    if (!r.polar_triple || !r.polar_triple->all_equal() || r.polar_triple->generators != c.want)
      return std::string("polar triple for ") + c.y;
    if (!r.i0_f_fy || r.i0_f_fy->value != c.want) return std::string("i0(f, f_y) for ") + c.y;
    if (r.semigroup->conductor + c.n - 1 != c.want) return std::string("c + n - 1 for ") + c.y;
  }
  return {};
}

std::string ac4() {
  const auto s = sweep(ParamTemplate{4, "t^6 + t^7"}, 5, 19);
  if (s.rows.size() != 6) return "expected 6 rows";
  for (const auto& r : s.rows) {
    const bool good = r.p % 13 != 0;
    const bool equal = r.mu.is_finite() && r.mu.value == r.semigroup->conductor;
    if (equal != good) return "mu = c mismatch at p = " + std::to_string(r.p);
    if (!good) {
      if (r.mu.value <= r.semigroup->conductor) return "mu > c expected at p = 13";
      if (r.i0_f_fy->value >= r.semigroup->conductor + r.n) return "strict polar inequality expected at p = 13";
    }
  }
  if (!s.all_checks_pass()) return "a check failed in the sweep";
  return {};
}

std::string ac5() {
  const std::pair<std::uint64_t, std::optional<std::int64_t>> want[] = {{3, 12}, {5, std::nullopt}, {7, 12}};
  for (const auto& [p, mu] : want) {
    const auto r = poly_report(p, "x^5 + y^4", V{4, 5});
    if (mu ? (!r.mu.is_finite() || r.mu.value != *mu) : r.mu.status != DimensionStatus::Infinite)
      return "mu = " + mu_text(r.mu) + " at p = " + std::to_string(p);
    if (!r.all_checks_pass()) return "a check failed at p = " + std::to_string(p);
  }
  return {};
}

std::string ac6() {
  const auto inf = poly_report(5, "x^5 + y^4", std::nullopt);
  if (inf.mu.status != DimensionStatus::Infinite) return "x^5 + y^4 should be infinite";
  const auto unit = poly_report(5, "(1 + x)*(x^5 + y^4)", std::nullopt);
  if (!unit.mu.is_finite() || unit.mu.value != 15) return "(1 + x)(x^5 + y^4) gave " + mu_text(unit.mu);
  return {};
}

std::string ac7() {
  const auto r = poly_report(5, "x^7 + y^6 + x^6*y", V{6, 7});
  if (!r.mu.is_finite() || r.mu.value != 30 || r.semigroup->conductor != 30) return "mu = " + mu_text(r.mu);
  if (r.conjecture.regime != "experimental" || r.conjecture.mu_equals_c != true) return "not logged as evidence";
  std::ostringstream out;
  out << "        evidence: p = 5, n = 6, mu = c = 30, outcome " << r.conjecture.outcome << '\n';
  std::cout << out.str();
  return {};
}

Parametrization random_branch(std::mt19937_64& rng, const PrimeField& F, std::int64_t max_n = 6) {
  const auto rp = oracle::random_param(rng, F.modulus(), max_n, 24);
  UnivarPoly y(F);
  for (auto [e, c] : rp.terms) y.add_term(e, F.from_int(c));
  return validate(F, rp.n, y);
}

std::string ac8a() {
  std::mt19937_64 rng(8001);
  int count = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const PrimeField F(p);
    for (int i = 0; i < 30; ++i, ++count) {
      const auto sd = generators_from_char_exponents(char_exponents(random_branch(rng, F)));
      if (sd.conductor != conductor_by_scan(sd.betabar)) return "formula and scan differ";
      if (sd.betabar.back() < 60 && sd.conductor != oracle::conductor(sd.betabar)) return "enumeration differs";
    }
  }
  return count >= 100 ? std::string{} : "too few instances";
}

std::string ac8b() {
  std::mt19937_64 rng(8002);
  int count = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const PrimeField F(p);
    for (int i = 0; i < 30; ++i, ++count) {
      const auto sd = generators_from_char_exponents(char_exponents(random_branch(rng, F)));
      if (sd.conductor != 2 * delta_by_gaps(sd.betabar)) return "c != 2 delta";
    }
  }
  return count >= 100 ? std::string{} : "too few instances";
}

std::string ac8c() {
  std::mt19937_64 rng(8003);
  int count = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const PrimeField F(p);
    std::uniform_int_distribution<Exponent> e(0, 4);
    std::uniform_int_distribution<std::uint32_t> c(1, static_cast<std::uint32_t>(p - 1));
    for (int i = 0; i < 30; ++i) {
      const auto prm = random_branch(rng, F);
      const auto sd = generators_from_char_exponents(char_exponents(prm));
      BivarPoly h(F);
      for (int k = 0; k < 3; ++k) h.add_term({e(rng), e(rng)}, {c(rng)});
      const Order o = intersection_order(prm, h);
      if (o.is_infinite()) continue;
      ++count;
      if (!oracle::in_semigroup(sd.betabar, o.value())) return "order " + to_string(o) + " outside the semigroup";
    }
  }
  return count >= 100 ? std::string{} : "too few finite instances (" + std::to_string(count) + ")";
}

std::string ac8d() {
  std::mt19937_64 rng(8004);
  int count = 0;
  for (std::uint64_t p : {7, 11, 13, 17}) {
    const PrimeField F(p);
    for (int i = 0; i < 30; ++i) {
      const auto r = analyze(random_branch(rng, F, 4), 64);
      if (!r.mu.is_finite()) continue;
      ++count;
      if (r.mu.value < r.semigroup->conductor) return "mu < c at p = " + std::to_string(p);
    }
  }
  return count >= 100 ? std::string{} : "too few finite instances (" + std::to_string(count) + ")";
}

std::string ac8e() {
  std::mt19937_64 rng(8005);
  int count = 0;
  for (std::uint64_t p : {5, 7, 11}) {
    const PrimeField F(p);
    std::uniform_int_distribution<std::uint32_t> unit(1, static_cast<std::uint32_t>(p - 1));
    for (Exponent a = 1; a <= 6; ++a) {
      for (Exponent b = 1; b <= 6; ++b, ++count) {
        const BivarPoly ga = BivarPoly::monomial(F, {a, 0}, {unit(rng)});
        const BivarPoly gb = BivarPoly::monomial(F, {0, b}, {unit(rng)});
        if (truncated_dim(ga, gb, static_cast<int>(a + b)) != oracle::monomial_box(a, b))
          return "box (" + std::to_string(a) + ", " + std::to_string(b) + ")";
      }
    }
  }
  return count >= 100 ? std::string{} : "too few instances";
}

std::string ac8f() {
  std::mt19937_64 rng(8006);
  int count = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const PrimeField F(p);
    for (int i = 0; i < 25; ++i, ++count) {
      const auto r = analyze(random_branch(rng, F, 4), 64);
      if (report_from_json(Json::parse(to_json(r).dump())) != r) return "json round trip";
    }
  }
  return count >= 100 ? std::string{} : "too few instances";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "semigroup, conductor and delta of (4; t^6 + t^7) over six primes", ac1},
      {"AC2", "mu of (y^2+x^3)^2+x^5 y: 16, and 17 at p = 13; main theorem holds", ac2},
      {"AC3", "i0(f, f_y) = c + n - 1 agrees three ways", ac3},
      {"AC4", "sweep 5..19: mu = c exactly off p = 13", ac4},
      {"AC5", "x^5 + y^4: mu = 12, infinite, 12 at p = 3, 5, 7", ac5},
      {"AC6", "non-branch inputs: infinite and 15", ac6},
      {"AC7", "mu = c = 30 outside the theorem regime, logged as evidence", ac7},
      {"AC8a", "conductor formula equals scanned conductor (random)", ac8a},
      {"AC8b", "c = 2 delta by gap counting (random)", ac8b},
      {"AC8c", "finite i0(f, h) lies in the semigroup (random)", ac8c},
      {"AC8d", "mu >= c when p > n and mu is finite (random)", ac8d},
      {"AC8e", "truncated dimension of (x^a, y^b) is a*b, a, b <= 6", ac8e},
      {"AC8f", "report json round trip (random)", ac8f},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (why.empty() ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title;
    if (!why.empty()) std::cout << "  (" << why << ')';
    std::cout << '\n';
    failed += why.empty() ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
