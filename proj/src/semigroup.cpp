#include "plbranch/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "plbranch/errors.hpp"

namespace plbranch {

namespace {

std::vector<std::int64_t> gcd_prefixes(std::span<const std::int64_t> betabar) {
  std::vector<std::int64_t> e;
  std::int64_t g = 0;
  for (auto b : betabar) {
    g = std::gcd(g, b);
    e.push_back(g);
  }
  return e;
}

std::int64_t gcd_all(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto b : v) g = std::gcd(g, b);
  return g;
}

std::int64_t euler_phi(std::int64_t d) {
  std::int64_t result = d;
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % q) continue;
    while (d % q == 0) d /= q;
    result -= result / q;
  }
  if (d > 1) result -= result / d;
  return result;
}

std::string join(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << '>';
  return os.str();
}

// Frobenius-number bound for generators with gcd 1: every s beyond it is in
// the semigroup.
std::int64_t scan_bound(std::span<const std::int64_t> betabar) {
  const auto [lo, hi] = std::minmax_element(betabar.begin(), betabar.end());
  return (*lo - 1) * (*hi - 1) + 2 * *lo + 1;
}

}  // namespace

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string to_string(const Rational& q) {
  return q.den == 1 ? std::to_string(q.num) : std::to_string(q.num) + "/" + std::to_string(q.den);
}

SemigroupData generators_from_char_exponents(const CharExponents& ce) {
  SemigroupData sd;
  const auto& beta = ce.beta;
  sd.betabar.push_back(beta[0]);
  if (beta.size() > 1) sd.betabar.push_back(beta[1]);
  for (std::size_t k = 1; k + 1 < beta.size(); ++k) {
    const std::int64_t nk = ce.eseq[k - 1] / ce.eseq[k];
    sd.betabar.push_back(nk * sd.betabar[k] + beta[k + 1] - beta[k]);
  }
  sd.eseq = gcd_prefixes(sd.betabar);
  if (sd.eseq != ce.eseq)
    throw std::logic_error("generators_from_char_exponents: gcd sequences of beta and betabar differ");
  for (std::size_t k = 1; k < sd.eseq.size(); ++k) sd.nseq.push_back(sd.eseq[k - 1] / sd.eseq[k]);
  sd.conductor = conductor(sd.betabar);
  sd.delta = delta_by_gaps(sd.betabar);
  return sd;
}

SemigroupData semigroup_from_generators(std::span<const std::int64_t> betabar) {
  if (betabar.size() < 2)
    throw InputError(ErrorKind::InvalidGenerators, "need at least two generators");
  if (betabar[0] < 2)
    throw InputError(ErrorKind::InvalidGenerators, "the first generator must be >= 2");
  for (std::size_t k = 1; k < betabar.size(); ++k)
    if (betabar[k] <= betabar[k - 1])
      throw InputError(ErrorKind::InvalidGenerators, "generators must be strictly increasing");
  if (gcd_all(betabar) != 1)
    throw InputError(ErrorKind::InvalidGenerators,
                     "generators " + join(betabar) + " have gcd > 1; no conductor exists");
  SemigroupData sd;
  sd.betabar.assign(betabar.begin(), betabar.end());
  sd.eseq = gcd_prefixes(sd.betabar);
  for (std::size_t k = 1; k < sd.eseq.size(); ++k) {
    if (sd.eseq[k] == sd.eseq[k - 1])
      throw InputError(ErrorKind::InvalidGenerators,
                       "generator " + std::to_string(sd.betabar[k]) +
                           " does not lower the gcd; not a minimal system of a branch");
    sd.nseq.push_back(sd.eseq[k - 1] / sd.eseq[k]);
  }
  sd.conductor = conductor(sd.betabar);
  sd.delta = delta_by_gaps(sd.betabar);
  return sd;
}

std::int64_t conductor(std::span<const std::int64_t> betabar) {
  const auto e = gcd_prefixes(betabar);
  std::int64_t c = 1 - betabar[0];
  for (std::size_t k = 1; k < betabar.size(); ++k) c += (e[k - 1] / e[k] - 1) * betabar[k];
  return c;
}

std::vector<bool> membership_table(std::span<const std::int64_t> betabar, std::int64_t bound) {
  std::vector<bool> in(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0) + 1), false);
  in[0] = true;
  for (std::int64_t s = 1; s <= bound; ++s) {
    for (auto b : betabar) {
      if (b > 0 && b <= s && in[s - b]) {
        in[s] = true;
        break;
      }
    }
  }
  return in;
}

bool membership(std::span<const std::int64_t> betabar, std::int64_t s) {
  if (s < 0) return false;
  return membership_table(betabar, s)[s];
}

std::int64_t conductor_by_scan(std::span<const std::int64_t> betabar) {
  if (gcd_all(betabar) != 1) throw std::invalid_argument("conductor_by_scan: gcd > 1");
  const std::int64_t b0 = *std::min_element(betabar.begin(), betabar.end());
  const std::int64_t bound = scan_bound(betabar) + b0;
  const auto in = membership_table(betabar, bound);
  std::int64_t run = 0;
  for (std::int64_t s = 0; s <= bound; ++s) {
    run = in[s] ? run + 1 : 0;
    if (run == b0) {
      const std::int64_t start = s - b0 + 1;
      if (start == 0 || !in[start - 1]) return start;
    }
  }
  throw std::logic_error("conductor_by_scan: no conductor below the Frobenius bound");
}

std::int64_t delta_by_gaps(std::span<const std::int64_t> betabar) {
  const std::int64_t c = conductor_by_scan(betabar);
  const auto in = membership_table(betabar, c);
  return std::count(in.begin(), in.begin() + c, false);
}

std::vector<Check> verify_structure(const SemigroupData& sd) {
  std::vector<Check> out;
  const auto& bb = sd.betabar;
  const std::int64_t g = gcd_all(bb);
  const std::int64_t b0 = bb.empty() ? 0 : bb[0];
  const std::int64_t bound =
      std::max<std::int64_t>(sd.conductor, 0) + b0 + (bb.empty() ? 0 : bb.back()) + 1;
  const auto in = membership_table(bb, bound);

  {
    std::string detail = "each generator is the least element outside the earlier generators";
    bool ok = !bb.empty() && b0 >= 1;
    if (ok) {
      std::int64_t first = 1;
      while (first <= bound && !in[first]) ++first;
      if (first != b0) {
        ok = false;
        detail = "betabar_0 = " + std::to_string(b0) + " but min(Gamma \\ {0}) = " + std::to_string(first);
      }
    }
    for (std::size_t k = 1; ok && k < bb.size(); ++k) {
      const std::span<const std::int64_t> earlier(bb.data(), k);
      const auto sub = membership_table(earlier, bound);
      std::int64_t least = -1;
      for (std::int64_t s = 1; s <= bound; ++s) {
        if (in[s] && !sub[s]) {
          least = s;
          break;
        }
      }
      if (least != bb[k]) {
        ok = false;
        detail = least < 0 ? std::to_string(bb[k]) + " lies in " + join(earlier)
                           : "least element of Gamma outside " + join(earlier) + " is " +
                                 std::to_string(least) + ", not " + std::to_string(bb[k]);
      }
    }
    out.push_back(make_check("generators_minimal", ok, detail));
  }

  if (g != 1) {
    const std::string why = "gcd of generators is " + std::to_string(g) + "; no conductor exists";
    out.push_back(make_check("conductor_definition", false, why));
    out.push_back(make_check("conductor_twice_delta", false, why));
  } else {
    const std::int64_t c = sd.conductor;
    bool ok = c >= 1 && !in[c - 1];
    for (std::int64_t s = c; ok && s < c + b0; ++s) ok = s >= 0 && in[s];
    out.push_back(make_check("conductor_definition", ok,
                             "c = " + std::to_string(c) + ": c-1 is a gap and [c, c+" +
                                 std::to_string(b0) + ") lies in Gamma"));
    std::int64_t gaps = 0;
    for (std::int64_t s = 0; s < std::max<std::int64_t>(c, 0); ++s) gaps += in[s] ? 0 : 1;
    out.push_back(make_check("conductor_twice_delta", gaps == sd.delta && c == 2 * sd.delta,
                             "c = " + std::to_string(c) + ", delta = " + std::to_string(sd.delta) +
                                 ", gaps counted = " + std::to_string(gaps)));
  }

  {
    bool ok = sd.nseq.size() + 1 == bb.size();
    std::string detail = "n_k * betabar_k < betabar_{k+1} and n_k > 1";
    for (std::size_t k = 1; ok && k < bb.size(); ++k) {
      if (sd.nseq[k - 1] <= 1) {
        ok = false;
        detail = "n_" + std::to_string(k) + " = " + std::to_string(sd.nseq[k - 1]) + " is not > 1";
      } else if (k + 1 < bb.size() && sd.nseq[k - 1] * bb[k] >= bb[k + 1]) {
        ok = false;
        detail = "n_" + std::to_string(k) + " * betabar_" + std::to_string(k) + " = " +
                 std::to_string(sd.nseq[k - 1] * bb[k]) + " >= " + std::to_string(bb[k + 1]);
      }
    }
    out.push_back(make_check("generator_growth", ok, detail));
  }
  return out;
}

MerleData merle_data(const SemigroupData& sd) {
  MerleData md;
  const std::int64_t n = sd.betabar.at(0);
  std::int64_t total = 0;
  for (std::size_t k = 1; k < sd.betabar.size(); ++k) {
    const std::int64_t prev = sd.eseq[k - 1];
    md.orders.push_back(n / sd.eseq[k] - n / prev);
    md.contacts.push_back(Rational::reduced(prev * sd.betabar[k], n));
    md.moduli.push_back(n / prev);
    total += md.orders.back();
  }
  if (total != n - 1) throw std::logic_error("merle_data: package orders do not sum to n - 1");
  return md;
}

PolarTriple polar_intersection_three_ways(const Parametrization& param, const CharExponents& ce,
                                          const SemigroupData& sd) {
  const std::int64_t n = param.n();
  if (n % param.p() == 0)
    throw InputError(ErrorKind::Precondition, "polar sum needs p not dividing n");
  PolarTriple t;
  // A root of unity of exact order d contributes ord(y(t) - y(eps t)), the
  // least exponent in supp y not divisible by d; phi(d) roots share that order.
  const auto support = param.y().support();
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d) continue;
    const auto it = std::find_if(support.begin(), support.end(),
                                 [d](Exponent j) { return static_cast<std::int64_t>(j) % d != 0; });
    if (it == support.end()) throw std::logic_error("polar sum: support is not primitive");
    t.roots_of_unity += euler_phi(d) * static_cast<std::int64_t>(*it);
  }
  for (std::size_t k = 1; k < ce.beta.size(); ++k)
    t.char_exponents += (ce.eseq[k - 1] - ce.eseq[k]) * ce.beta[k];
  for (std::size_t k = 1; k < sd.betabar.size(); ++k) t.generators += (sd.nseq[k - 1] - 1) * sd.betabar[k];
  return t;
}

}  // namespace plbranch
