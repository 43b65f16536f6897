#pragma once

// Independent reference computations used only by tests. None of these call
// into the library's algorithms beyond constructing polynomials.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "plbranch/polyring.hpp"

namespace plbranch::oracle {

/// s in <gens> by exhaustive enumeration of non-negative combinations.
inline bool in_semigroup(const std::vector<std::int64_t>& gens, std::int64_t s, std::size_t from = 0) {
  if (s == 0) return true;
  if (s < 0 || from == gens.size()) return false;
  for (std::int64_t k = 0; k * gens[from] <= s; ++k)
    if (in_semigroup(gens, s - k * gens[from], from + 1)) return true;
  return false;
}

/// Largest gap + 1, by enumeration up to a generous bound.
inline std::int64_t conductor(const std::vector<std::int64_t>& gens) {
  std::int64_t bound = gens.front() * gens.back() + gens.back();
  std::int64_t last_gap = -1;
  for (std::int64_t s = 0; s <= bound; ++s)
    if (!in_semigroup(gens, s)) last_gap = s;
  return last_gap + 1;
}

inline std::int64_t gap_count(const std::vector<std::int64_t>& gens) {
  std::int64_t c = conductor(gens), gaps = 0;
  for (std::int64_t s = 0; s < c; ++s) gaps += in_semigroup(gens, s) ? 0 : 1;
  return gaps;
}

/// ord_t g(u t, v t + w t^2 ...) for the line/curve (x(t), y(t)) given as
/// plain coefficient vectors, by direct term-by-term expansion.
inline std::int64_t order_along(const BivarPoly& g, const std::vector<std::int64_t>& xt,
                                const std::vector<std::int64_t>& yt) {
  const auto& F = g.field();
  const std::int64_t p = F.modulus();
  auto mul = [p](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
  };
  std::vector<std::int64_t> total{0};
  for (const auto& [m, c] : g.terms()) {
    std::vector<std::int64_t> term{static_cast<std::int64_t>(c.value)};
    for (Exponent i = 0; i < m.x; ++i) term = mul(term, xt);
    for (Exponent j = 0; j < m.y; ++j) term = mul(term, yt);
    if (term.size() > total.size()) total.resize(term.size(), 0);
    for (std::size_t k = 0; k < term.size(); ++k) total[k] = (total[k] + term[k]) % p;
  }
  for (std::size_t k = 0; k < total.size(); ++k)
    if ((total[k] % p + p) % p != 0) return static_cast<std::int64_t>(k);
  return -1;  // identically zero
}

/// Rank over F_p of a dense matrix by textbook row reduction.
inline std::size_t rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto inv = [p](std::int64_t a) {
    std::int64_t res = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) res = res * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return res;
  };
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t s = inv(m[r][c]);
    for (auto& v : m[r]) v = v * s % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// dim K[x,y]/(g1, g2, m^D) by building the truncated multiplication matrix
/// directly and ranking it with the textbook routine above.
inline std::int64_t truncated_dim(const BivarPoly& g1, const BivarPoly& g2, int D) {
  std::vector<std::pair<Exponent, Exponent>> basis;
  for (int d = 0; d < D; ++d)
    for (int i = 0; i <= d; ++i) basis.emplace_back(i, d - i);
  auto index = [&](Exponent a, Exponent b) -> std::int64_t {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].first == a && basis[k].second == b) return static_cast<std::int64_t>(k);
    return -1;
  };
  std::vector<std::vector<std::int64_t>> rows;
  for (const BivarPoly* g : {&g1, &g2}) {
    for (auto [a, b] : basis) {
      std::vector<std::int64_t> row(basis.size(), 0);
      bool any = false;
      for (const auto& [m, c] : g->terms()) {
        const auto k = index(m.x + a, m.y + b);
        if (k >= 0) {
          row[k] = c.value;
          any = true;
        }
      }
      if (any) rows.push_back(row);
    }
  }
  return static_cast<std::int64_t>(basis.size()) -
         static_cast<std::int64_t>(rank(rows, g1.field().modulus()));
}

/// Number of monomials x^i y^j with i < a, j < b: dim K[[x,y]]/(x^a, y^b).
inline std::int64_t monomial_box(std::int64_t a, std::int64_t b) { return a * b; }

/// Random good parametrization data: n coprime to p, support above n with
/// gcd(n, supp) = 1.
struct RandomParam {
  std::int64_t n;
  std::vector<std::pair<Exponent, std::int64_t>> terms;  // exponent, coefficient (nonzero mod p)
};

inline RandomParam random_param(std::mt19937_64& rng, std::int64_t p, std::int64_t max_n = 6,
                                Exponent max_exp = 20) {
  for (;;) {
    RandomParam rp;
    rp.n = std::uniform_int_distribution<std::int64_t>(2, max_n)(rng);
    if (rp.n % p == 0) continue;
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    std::int64_t g = rp.n;
    for (int k = 0; k < count; ++k) {
      Exponent e = std::uniform_int_distribution<Exponent>(static_cast<Exponent>(rp.n) + 1, max_exp)(rng);
      std::int64_t c = std::uniform_int_distribution<std::int64_t>(1, p - 1)(rng);
      bool dup = false;
      for (auto& [e2, c2] : rp.terms) dup = dup || e2 == e;
      if (dup) continue;
      rp.terms.emplace_back(e, c);
      g = std::gcd(g, static_cast<std::int64_t>(e));
    }
    if (g == 1) return rp;
  }
}

}  // namespace plbranch::oracle
