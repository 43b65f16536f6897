#include "plbranch/milnor.hpp"

#include <algorithm>
#include <stdexcept>

#include "plbranch/errors.hpp"

namespace plbranch {

std::string_view to_string(DimensionStatus s) {
  switch (s) {
    case DimensionStatus::Finite: return "finite";
    case DimensionStatus::Infinite: return "infinite";
    case DimensionStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Columns: monomials of degree < L, by degree, then by y-exponent.
std::size_t column(Exponent x, Exponent y) {
  const std::size_t d = x + y;
  return d * (d + 1) / 2 + y;
}

std::size_t monomials_below(std::size_t degree) { return degree * (degree + 1) / 2; }

std::size_t degree_of_column(std::size_t c) {
  std::size_t d = 0;
  while (monomials_below(d + 1) <= c) ++d;
  return d;
}

class Echelon {
 public:
  Echelon(const PrimeField& field, std::size_t width)
      : field_(field), p_(field.modulus()), width_(width), pivots_(width) {}

  // Reduces `row` in place against the stored pivots and keeps it when it
  // survives. Returns the new pivot column, or width() if the row reduced to 0.
  std::size_t insert(std::vector<std::uint32_t>& row, std::size_t first) {
    for (std::size_t c = first; c < width_; ++c) {
      if (row[c] == 0) continue;
      auto& piv = pivots_[c];
      if (piv.empty()) {
        const std::uint64_t inv = field_.inv(FieldElement{row[c]}).value;
        piv.resize(width_ - c);
        for (std::size_t j = c; j < width_; ++j)
          piv[j - c] = static_cast<std::uint32_t>(row[j] * inv % p_);
        ++rank_;
        return c;
      }
      const std::uint64_t factor = p_ - row[c];
      for (std::size_t j = c; j < width_; ++j) {
        if (piv[j - c] != 0) row[j] = static_cast<std::uint32_t>((row[j] + factor * piv[j - c]) % p_);
      }
    }
    return width_;
  }

  std::size_t rank() const { return rank_; }

 private:
  PrimeField field_;
  std::uint64_t p_;
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> pivots_;
  std::size_t rank_ = 0;
};

}  // namespace

std::vector<std::int64_t> truncated_dim_profile(const BivarPoly& g1, const BivarPoly& g2, int degree) {
  if (degree < 1) throw std::invalid_argument("truncated_dim: degree must be >= 1");
  if (g1.field() != g2.field()) throw std::invalid_argument("truncated_dim: mixed fields");
  const auto L = static_cast<Exponent>(degree);
  const std::size_t width = monomials_below(L);
  Echelon ech(g1.field(), width);
  std::vector<std::size_t> pivots_in_degree(L, 0);

  std::vector<std::uint32_t> row(width);
  for (const BivarPoly* g : {&g1, &g2}) {
    if (g->is_zero()) continue;
    const auto ord = static_cast<Exponent>(g->order().value());
    for (Exponent shift = 0; shift + ord < L; ++shift) {
      for (Exponent b = 0; b <= shift; ++b) {
        const Exponent a = shift - b;
        std::fill(row.begin(), row.end(), 0);
        for (const auto& [m, c] : g->terms()) {
          if (m.total() + shift < L) row[column(m.x + a, m.y + b)] = c.value;
        }
        const std::size_t piv = ech.insert(row, monomials_below(shift + ord));
        if (piv < width) ++pivots_in_degree[degree_of_column(piv)];
      }
    }
  }

  std::vector<std::int64_t> profile(L + 1, 0);
  std::size_t pivots_below = 0;
  for (Exponent D = 1; D <= L; ++D) {
    pivots_below += pivots_in_degree[D - 1];
    profile[D] = static_cast<std::int64_t>(monomials_below(D) - pivots_below);
  }
  return profile;
}

std::int64_t truncated_dim(const BivarPoly& g1, const BivarPoly& g2, int degree) {
  return truncated_dim_profile(g1, g2, degree).back();
}

MilnorResult local_dimension(const BivarPoly& g1, const BivarPoly& g2, int max_degree, int first_degree) {
  MilnorResult r;
  if (g1.is_zero() || g2.is_zero()) {
    r.status = DimensionStatus::Infinite;
    r.reason = "a generator vanishes identically; the ideal is principal";
    return r;
  }
  const int first = std::max(first_degree, 1);
  if (max_degree < first + 1) {
    r.status = DimensionStatus::Unknown;
    r.stabilized_at = max_degree;
    r.reason = "degree bound " + std::to_string(max_degree) + " leaves no room to test stabilization";
    return r;
  }
  int level = std::min(std::max(16, first + 1), max_degree);
  int checked_until = first;
  for (;;) {
    const auto d = truncated_dim_profile(g1, g2, level);
    for (int D = first; D + 1 <= level; ++D) {
      if (d[D + 1] < d[D]) throw std::logic_error("local_dimension: truncated dimension decreased");
      if (D >= checked_until && d[D] == d[D + 1]) {
        r.status = DimensionStatus::Finite;
        r.value = d[D];
        r.stabilized_at = D;
        return r;
      }
    }
    checked_until = level - 1;
    if (level == max_degree) break;
    // Doubling keeps the total work within a constant factor of the last
    // level; go straight to the bound when doubling would nearly reach it.
    level = 3 * level >= max_degree ? max_degree : 2 * level;
  }
  r.status = DimensionStatus::Unknown;
  r.stabilized_at = max_degree;
  r.reason = "no stabilization up to degree " + std::to_string(max_degree);
  return r;
}

MilnorResult milnor_number(const BivarPoly& f, int max_degree) {
  const Order ord = f.order();
  if (ord.is_infinite() || ord.value() < 2)
    throw InputError(ErrorKind::SmoothCurve, "milnor_number needs ord f >= 2");
  const BivarPoly fx = partial_x(f);
  const BivarPoly fy = partial_y(f);
  if (fx.is_zero() || fy.is_zero()) {
    MilnorResult r;
    r.status = DimensionStatus::Infinite;
    r.reason = fx.is_zero() ? "f_x vanishes identically" : "f_y vanishes identically";
    return r;
  }
  return local_dimension(fx, fy, max_degree, 2);
}

int default_max_degree(std::optional<std::int64_t> conductor) {
  if (!conductor) return 96;
  return static_cast<int>(std::max<std::int64_t>(64, 4 * *conductor + 16));
}

}  // namespace plbranch
