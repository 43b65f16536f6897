#include "plbranch/primefield.hpp"

#include <array>
#include <string>

#include "plbranch/errors.hpp"

namespace plbranch {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::PDividesN: return "PDividesN";
    case ErrorKind::OrderNotAboveN: return "OrderNotAboveN";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::SmoothCurve: return "SmoothCurve";
    case ErrorKind::NotABranch: return "NotABranch";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::InvalidGenerators: return "InvalidGenerators";
    case ErrorKind::DegenerateDegree: return "DegenerateDegree";
    case ErrorKind::Precondition: return "PreconditionViolated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw InputError(ErrorKind::NotPrime,
                     std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
}

FieldElement PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DivisionByZero();
  std::int64_t r0 = p_, r1 = a.value;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const noexcept {
  return {static_cast<std::uint32_t>(powmod(a.value, e, p_))};
}

}  // namespace plbranch
