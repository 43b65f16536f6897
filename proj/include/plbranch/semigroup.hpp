#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plbranch/branch.hpp"
#include "plbranch/check.hpp"

namespace plbranch {

/// Minimal generators of the value semigroup together with the derived
/// sequences. nseq[k-1] holds n_k = e_{k-1} / e_k.
struct SemigroupData {
  std::vector<std::int64_t> betabar;
  std::vector<std::int64_t> eseq;
  std::vector<std::int64_t> nseq;
  std::int64_t conductor = 0;
  std::int64_t delta = 0;

  friend bool operator==(const SemigroupData&, const SemigroupData&) = default;
};

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& q);

/// Polar package data per k = 1..g: orders o_k = n/e_k - n/e_{k-1},
/// contact quotients e_{k-1} betabar_k / n, divisibility moduli n/e_{k-1}.
struct MerleData {
  std::vector<std::int64_t> orders;
  std::vector<Rational> contacts;
  std::vector<std::int64_t> moduli;

  friend bool operator==(const MerleData&, const MerleData&) = default;
};

/// i0(f, f_y) three ways: the roots-of-unity sum over supp y, the
/// characteristic-exponent sum and the generator sum.
struct PolarTriple {
  std::int64_t roots_of_unity = 0;
  std::int64_t char_exponents = 0;
  std::int64_t generators = 0;

  bool all_equal() const noexcept {
    return roots_of_unity == char_exponents && char_exponents == generators;
  }
  friend bool operator==(const PolarTriple&, const PolarTriple&) = default;
};

/// Zariski's recursion betabar_{k+1} = n_k betabar_k + beta_{k+1} - beta_k.
SemigroupData generators_from_char_exponents(const CharExponents& ce);

/// Builds SemigroupData from an asserted generator list. Throws
/// InputError(InvalidGenerators) unless the list is strictly increasing,
/// starts at >= 2 and has gcd 1.
SemigroupData semigroup_from_generators(std::span<const std::int64_t> betabar);

/// Conductor formula sum_k (n_k - 1) betabar_k - betabar_0 + 1.
std::int64_t conductor(std::span<const std::int64_t> betabar);

/// table[s] tells whether s is in the semigroup, for s = 0..bound.
std::vector<bool> membership_table(std::span<const std::int64_t> betabar, std::int64_t bound);
bool membership(std::span<const std::int64_t> betabar, std::int64_t s);

/// Number of gaps, counted by brute force below the conductor.
std::int64_t delta_by_gaps(std::span<const std::int64_t> betabar);

/// Smallest s with s - 1 outside the semigroup and [s, s + betabar_0) inside,
/// found by scanning; independent of the conductor formula.
std::int64_t conductor_by_scan(std::span<const std::int64_t> betabar);

/// Brute-force checks: minimality of each generator, the conductor
/// property, c = 2 delta, and n_k betabar_k < betabar_{k+1}.
std::vector<Check> verify_structure(const SemigroupData& sd);

MerleData merle_data(const SemigroupData& sd);

/// Throws InputError(Precondition) when p divides n.
PolarTriple polar_intersection_three_ways(const Parametrization& param, const CharExponents& ce,
                                          const SemigroupData& sd);

}  // namespace plbranch
