#include "plbranch/branch.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "plbranch/errors.hpp"

namespace plbranch {

Parametrization validate(const PrimeField& field, std::int64_t n, const UnivarPoly& y) {
  if (y.field() != field) throw std::invalid_argument("validate: y lives over a different field");
  const auto p = static_cast<std::int64_t>(field.modulus());
  if (n < 2) {
    throw InputError(ErrorKind::SmoothCurve,
                     "n = " + std::to_string(n) + ": a branch needs multiplicity n >= 2");
  }
  if (n % p == 0) {
    throw InputError(ErrorKind::PDividesN, "p = " + std::to_string(p) + " divides n = " +
                                               std::to_string(n) +
                                               "; no good parametrization (t^n, y(t)) exists");
  }
  const Order ord_y = y.order();
  if (ord_y.is_finite() && ord_y.value() <= n) {
    throw InputError(ErrorKind::OrderNotAboveN,
                     "ord y = " + std::to_string(ord_y.value()) + " <= n = " + std::to_string(n) +
                         "; apply y <- y - c*x^k (or swap x and y) outside the tool so that "
                         "ord y > n");
  }
  std::int64_t g = n;
  for (Exponent e : y.support()) g = std::gcd(g, static_cast<std::int64_t>(e));
  if (g != 1) {
    throw InputError(ErrorKind::NotPrimitive,
                     "gcd(n, supp y) = " + std::to_string(g) +
                         " > 1; the parametrization is not good (not generically injective)");
  }
  return Parametrization(n, y);
}

CharExponents char_exponents(const Parametrization& param) {
  CharExponents ce;
  std::int64_t e = param.n();
  ce.beta.push_back(e);
  ce.eseq.push_back(e);
  const auto support = param.y().support();
  while (e != 1) {
    std::int64_t next = -1;
    for (Exponent j : support) {
      if (static_cast<std::int64_t>(j) % e != 0) {
        next = j;
        break;
      }
    }
    if (next < 0) throw std::logic_error("char_exponents: primitivity violated");
    e = std::gcd(e, next);
    ce.beta.push_back(next);
    ce.eseq.push_back(e);
  }
  return ce;
}

BivarPoly implicitize(const Parametrization& param) {
  const PrimeField& F = param.field();
  const auto n = static_cast<Exponent>(param.n());

  PolyInT a;  // t^n - x
  a.coeffs.assign(n + 1, BivarPoly(F));
  a.coeffs[0] = -BivarPoly::x(F);
  a.coeffs[n] = BivarPoly::constant(F, F.one());

  PolyInT b;  // y(t) - y
  b.coeffs.assign(param.y().degree() + 1, BivarPoly(F));
  for (const auto& [e, c] : param.y().terms()) b.coeffs[e] = BivarPoly::constant(F, c);
  b.coeffs[0] -= BivarPoly::y(F);

  BivarPoly res = resultant_t(a, b);
  const FieldElement lead = res.coeff({0, n});
  if (lead.is_zero()) throw std::logic_error("implicitize: resultant has no y^n term");
  res = res.scaled(F.inv(lead));

  if (!substitute_param(res, n, param.y()).is_zero())
    throw std::logic_error("implicitize: F(t^n, y(t)) != 0");
  if (res.order() != Order(n)) throw std::logic_error("implicitize: ord F != n");
  if (res.deg_y() != n) throw std::logic_error("implicitize: deg_y F != n");
  return res;
}

Order intersection_order(const Parametrization& param, const BivarPoly& h) {
  return substitute_param(h, static_cast<Exponent>(param.n()), param.y()).order();
}

}  // namespace plbranch
