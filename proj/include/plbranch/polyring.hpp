#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plbranch/primefield.hpp"

namespace plbranch {

using Exponent = std::uint32_t;

/// Order of a series: a non-negative integer or +infinity (the order of 0).
class Order {
 public:
  constexpr Order(std::int64_t v) : value_(v), infinite_(false) {}  // NOLINT: implicit by intent
  static constexpr Order infinity() {
    Order o(0);
    o.infinite_ = true;
    return o;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;

  friend constexpr bool operator==(Order a, Order b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Order operator+(Order a, Order b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Order(a.value_ + b.value_);
  }

 private:
  std::int64_t value_;
  bool infinite_;
};

std::string to_string(Order o);

/// Sparse univariate polynomial in t over F_p. Zero coefficients are never
/// stored.
class UnivarPoly {
 public:
  using Terms = std::map<Exponent, FieldElement>;

  explicit UnivarPoly(PrimeField field) : field_(field) {}
  static UnivarPoly monomial(PrimeField field, Exponent e, FieldElement c);

  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  FieldElement coeff(Exponent e) const;
  /// Adds c·t^e into the polynomial.
  void add_term(Exponent e, FieldElement c);

  bool is_zero() const noexcept { return terms_.empty(); }
  Order order() const;
  /// Degree of a nonzero polynomial; 0 for the zero polynomial.
  Exponent degree() const noexcept;
  std::vector<Exponent> support() const;

  UnivarPoly operator-() const;
  UnivarPoly& operator+=(const UnivarPoly& rhs);
  UnivarPoly& operator-=(const UnivarPoly& rhs);
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  UnivarPoly scaled(FieldElement c) const;

  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

 private:
  PrimeField field_;
  Terms terms_;
};

/// Exponent pair of x^i y^j. Ordered lexicographically with y above x, so the
/// last key of a polynomial is its lex leading monomial.
struct Monomial {
  Exponent x = 0;
  Exponent y = 0;

  Exponent total() const noexcept { return x + y; }
  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Sparse bivariate polynomial in x, y over F_p.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  explicit BivarPoly(PrimeField field) : field_(field) {}
  static BivarPoly constant(PrimeField field, FieldElement c);
  static BivarPoly monomial(PrimeField field, Monomial m, FieldElement c);
  static BivarPoly x(PrimeField field) { return monomial(field, {1, 0}, field.one()); }
  static BivarPoly y(PrimeField field) { return monomial(field, {0, 1}, field.one()); }

  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  FieldElement coeff(Monomial m) const;
  void add_term(Monomial m, FieldElement c);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Minimal total degree of a stored monomial.
  Order order() const;
  Exponent total_degree() const noexcept;
  Exponent deg_x() const noexcept;
  Exponent deg_y() const noexcept;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly scaled(FieldElement c) const;
  BivarPoly pow(std::uint64_t e) const;
  /// Exchanges the roles of x and y.
  BivarPoly swapped() const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  PrimeField field_;
  Terms terms_;
};

BivarPoly partial_x(const BivarPoly& f);
BivarPoly partial_y(const BivarPoly& f);

/// Quotient a / b when b divides a exactly. Throws std::domain_error
/// otherwise.
BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b);

/// h(t^n, y(t)), computed exactly by Horner accumulation in y.
UnivarPoly substitute_param(const BivarPoly& h, Exponent n, const UnivarPoly& y);

/// Polynomial in t whose coefficients are bivariate polynomials;
/// coeffs[k] multiplies t^k.
struct PolyInT {
  std::vector<BivarPoly> coeffs;

  /// Degree in t after discarding zero leading coefficients; -1 for zero.
  int degree() const;
};

/// Sylvester resultant eliminating t, by fraction-free (Bareiss) elimination.
/// The sign is not normalized. Throws InputError(DegenerateDegree) when
/// either argument has t-degree below 1.
BivarPoly resultant_t(const PolyInT& a, const PolyInT& b);

std::string to_string(const UnivarPoly& p, char var = 't');
std::string to_string(const BivarPoly& p);

}  // namespace plbranch
