#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plbranch/polyring.hpp"

namespace plbranch {

enum class DimensionStatus { Finite, Infinite, Unknown };

std::string_view to_string(DimensionStatus s);

/// dim K[[x,y]]/I for an ideal I with two generators.
///   Finite:   value, and stabilized_at = D with d(D) = d(D+1).
///   Infinite: reason names the zero generator.
///   Unknown:  no stabilization up to the degree bound; stabilized_at holds
///             the bound that was reached.
struct MilnorResult {
  DimensionStatus status = DimensionStatus::Unknown;
  std::int64_t value = 0;
  int stabilized_at = 0;
  std::string reason;

  bool is_finite() const noexcept { return status == DimensionStatus::Finite; }
  friend bool operator==(const MilnorResult&, const MilnorResult&) = default;
};

/// d(D) = dim K[x,y] / (g1, g2, m^D): monomials of degree < D minus the rank
/// of the truncated multiples x^a y^b g_i, by exact elimination over F_p.
std::int64_t truncated_dim(const BivarPoly& g1, const BivarPoly& g2, int degree);

/// d(1), ..., d(degree) from a single elimination at the top degree;
/// entry 0 is unused. Pivots are taken on the lowest monomial, so the
/// projection to degree < D of the echelon basis spans the level-D rows.
std::vector<std::int64_t> truncated_dim_profile(const BivarPoly& g1, const BivarPoly& g2, int degree);

/// dim K[[x,y]]/(g1, g2), via the first D >= first_degree with d(D) = d(D+1)
/// (Nakayama: then m^D lies in the ideal). Searches D + 1 <= max_degree.
MilnorResult local_dimension(const BivarPoly& g1, const BivarPoly& g2, int max_degree,
                             int first_degree = 1);

/// mu(f) = dim K[[x,y]]/(f_x, f_y). Infinite as soon as a partial vanishes
/// identically. Throws InputError(SmoothCurve) when ord f < 2.
MilnorResult milnor_number(const BivarPoly& f, int max_degree);

/// max(64, 4c + 16) when the conductor is known, 96 otherwise.
int default_max_degree(std::optional<std::int64_t> conductor);

}  // namespace plbranch
