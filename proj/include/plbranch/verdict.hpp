#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plbranch/branch.hpp"
#include "plbranch/check.hpp"
#include "plbranch/milnor.hpp"
#include "plbranch/semigroup.hpp"

namespace plbranch {

enum class InputMode { Param, Poly };

struct Hypotheses {
  bool p_not_divides_n = false;
  bool p_greater_than_n = false;
  bool generators_user_asserted = false;
  bool swapped_xy = false;

  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

/// i0(f, f_y): a plain integer when finite.
struct IntersectionValue {
  DimensionStatus status = DimensionStatus::Unknown;
  std::int64_t value = 0;
  std::string reason;

  bool is_finite() const noexcept { return status == DimensionStatus::Finite; }
  friend bool operator==(const IntersectionValue&, const IntersectionValue&) = default;
};

/// Evidence about the open conjecture. Never counted as a check failure.
struct ConjectureEvidence {
  bool applicable = false;
  std::string regime;  // "theorem" when p > n, "experimental" otherwise
  bool predicate = false;  // p divides none of betabar_0..betabar_g
  std::optional<bool> mu_equals_c;
  std::string outcome;  // supporting | counter-evidence | inconclusive | not-applicable
  std::string note;

  friend bool operator==(const ConjectureEvidence&, const ConjectureEvidence&) = default;
};

struct BranchReport {
  InputMode mode = InputMode::Param;
  std::string f;  // implicit equation (param mode) or the input series
  std::uint32_t p = 0;
  std::int64_t n = 0;
  std::optional<std::vector<std::int64_t>> y_support;
  std::optional<std::vector<std::int64_t>> beta;
  std::optional<SemigroupData> semigroup;
  std::optional<MerleData> merle;
  std::optional<PolarTriple> polar_triple;
  std::optional<IntersectionValue> i0_f_fy;
  MilnorResult mu;
  Hypotheses hypotheses;
  std::vector<Check> checks;
  ConjectureEvidence conjecture;

  const Check* find_check(std::string_view name) const;
  bool all_checks_pass() const;
  friend bool operator==(const BranchReport&, const BranchReport&) = default;
};

/// Full pipeline on a validated parametrization. Without an explicit degree
/// bound, default_max_degree(c) is used.
BranchReport analyze(const Parametrization& param, std::optional<int> max_degree = std::nullopt);

/// Analysis of an explicit series f. With generators (taken on trust) every
/// semigroup-dependent check runs; without them only mu is computed. When
/// i0(f, x) > ord f the variables are swapped first. i0(f, f_y) comes from
/// the local algebra K[[x,y]]/(f, f_y).
BranchReport analyze_poly(const BivarPoly& f, std::optional<std::vector<std::int64_t>> generators,
                          std::optional<int> max_degree = std::nullopt);

Check check_lemma_conductor_polar(const BranchReport& r);
Check check_lemma_inequality(const BranchReport& r);
/// The main biconditional and, as a separate line item, its corollary form.
std::vector<Check> check_main_theorem(const BranchReport& r);
Check check_milnor_lower_bound(const BranchReport& r);
ConjectureEvidence conjecture_probe(const BranchReport& r);

struct ParamTemplate {
  std::int64_t n = 0;
  std::string y_text;  // integer coefficients, reduced per prime
};

struct PolyTemplate {
  std::string f_text;
  std::optional<std::vector<std::int64_t>> generators;
};

struct SkippedPrime {
  std::uint32_t p = 0;
  std::string reason;

  friend bool operator==(const SkippedPrime&, const SkippedPrime&) = default;
};

struct SweepResult {
  std::vector<BranchReport> rows;
  std::vector<SkippedPrime> skipped;

  bool all_checks_pass() const;
};

/// One row per prime in [lo, hi], evaluated concurrently and merged in prime
/// order. Primes that fail validation are listed in `skipped`.
SweepResult sweep(const ParamTemplate& tmpl, std::uint64_t lo, std::uint64_t hi,
                  std::optional<int> max_degree = std::nullopt);
SweepResult sweep(const PolyTemplate& tmpl, std::uint64_t lo, std::uint64_t hi,
                  std::optional<int> max_degree = std::nullopt);

}  // namespace plbranch
