#include <random>

#include "doctest.h"
#include "plbranch/errors.hpp"
#include "plbranch/primefield.hpp"

using namespace plbranch;

TEST_CASE("field arithmetic examples") {
  const PrimeField f5(5), f7(7), f13(13);
  CHECK(f5.add({3}, {4}) == FieldElement{2});
  CHECK(f13.mul({12}, {12}) == FieldElement{1});
  CHECK(f7.mul({0}, {6}) == FieldElement{0});
  CHECK(f5.sub({1}, {3}) == FieldElement{3});
  CHECK(f13.from_int(-1) == FieldElement{12});
}

TEST_CASE("inverse examples and division by zero") {
  const PrimeField f5(5), f7(7), f13(13);
  CHECK(f5.inv({2}) == FieldElement{3});
  CHECK(f13.inv({12}) == FieldElement{12});
  CHECK(f7.inv({1}) == FieldElement{1});
  CHECK_THROWS_AS(f7.inv({0}), DivisionByZero);
}

TEST_CASE("modulus must be a prime below 2^31") {
  CHECK_THROWS_AS(PrimeField(9), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(0), InputError);
  CHECK_THROWS_AS(PrimeField(4294967311ULL), InputError);  // prime, but too large
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647ULL));
  try {
    PrimeField bad(15);
  } catch (const InputError& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("is_prime agrees with trial division") {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial(n));
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(2147483649ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20251016);
  for (std::uint32_t p : {3u, 13u, 65537u, 2147483647u}) {
    const PrimeField F(p);
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    for (int i = 0; i < 300; ++i) {
      const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
}
