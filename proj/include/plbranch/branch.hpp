#pragma once

#include <cstdint>
#include <vector>

#include "plbranch/polyring.hpp"

namespace plbranch {

/// A good parametrization (t^n, y(t)) of a branch over F_p, with y a
/// polynomial. Only obtainable through validate(), so every instance
/// satisfies: n >= 2, p does not divide n, ord y > n and
/// gcd(n, supp y) = 1.
class Parametrization {
 public:
  const PrimeField& field() const noexcept { return y_.field(); }
  std::uint32_t p() const noexcept { return y_.field().modulus(); }
  std::int64_t n() const noexcept { return n_; }
  const UnivarPoly& y() const noexcept { return y_; }

  friend Parametrization validate(const PrimeField& field, std::int64_t n, const UnivarPoly& y);

 private:
  Parametrization(std::int64_t n, UnivarPoly y) : n_(n), y_(std::move(y)) {}

  std::int64_t n_;
  UnivarPoly y_;
};

/// Checks the hypotheses listed on Parametrization, in that order. Throws
/// InputError with kind SmoothCurve, PDividesN, OrderNotAboveN or
/// NotPrimitive. NotPrime is raised earlier, by PrimeField itself.
Parametrization validate(const PrimeField& field, std::int64_t n, const UnivarPoly& y);

/// beta[0] = n < beta[1] < ... < beta[g]; eseq[k] = gcd(beta[0..k]), ending at 1.
struct CharExponents {
  std::vector<std::int64_t> beta;
  std::vector<std::int64_t> eseq;

  std::size_t genus() const noexcept { return beta.size() - 1; }
  friend bool operator==(const CharExponents&, const CharExponents&) = default;
};

CharExponents char_exponents(const Parametrization& param);

/// Monic-in-y implicit equation F with F(t^n, y(t)) = 0, ord F = deg_y F = n,
/// obtained as Res_t(t^n - x, y(t) - y).
BivarPoly implicitize(const Parametrization& param);

/// i0(f, h) = ord_t h(t^n, y(t)); infinite when h vanishes on the branch.
Order intersection_order(const Parametrization& param, const BivarPoly& h);

}  // namespace plbranch
