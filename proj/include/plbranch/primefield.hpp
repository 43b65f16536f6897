#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace plbranch {

/// Residue class in F_p. The modulus lives in the owning PrimeField, so a
/// bare FieldElement is only meaningful next to its field.
struct FieldElement {
  std::uint32_t value = 0;

  bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElement a) {
  return os << a.value;
}

/// Deterministic Miller-Rabin; exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// The prime field F_p for 2 <= p < 2^31. Products of two residues fit in
/// 64 bits, so no wider intermediates are needed.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  /// Throws InputError(NotPrime) unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(std::int64_t v) const noexcept;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const noexcept {
    return {a.value == 0 ? 0 : p_ - a.value};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  /// Extended Euclid. Throws DivisionByZero for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace plbranch
