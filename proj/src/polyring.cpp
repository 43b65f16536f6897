#include "plbranch/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "plbranch/errors.hpp"

namespace plbranch {

std::int64_t Order::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite order");
  return value_;
}

std::string to_string(Order o) {
  return o.is_infinite() ? std::string("inf") : std::to_string(o.value());
}

namespace {

template <class Terms, class Key>
void accumulate(const PrimeField& field, Terms& terms, Key k, FieldElement c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (inserted) return;
  it->second = field.add(it->second, c);
  if (it->second.is_zero()) terms.erase(it);
}

void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (a != b) throw std::invalid_argument("polynomials over different prime fields");
}

}  // namespace

// ---------------------------------------------------------------- UnivarPoly

UnivarPoly UnivarPoly::monomial(PrimeField field, Exponent e, FieldElement c) {
  UnivarPoly p(field);
  p.add_term(e, c);
  return p;
}

FieldElement UnivarPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void UnivarPoly::add_term(Exponent e, FieldElement c) { accumulate(field_, terms_, e, c); }

Order UnivarPoly::order() const {
  if (terms_.empty()) return Order::infinity();
  return Order(terms_.begin()->first);
}

Exponent UnivarPoly::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::vector<Exponent> UnivarPoly::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
  return r;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& rhs) {
  require_same_field(field_, rhs.field_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& rhs) {
  require_same_field(field_, rhs.field_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, field_.neg(c));
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  require_same_field(a.field_, b.field_);
  UnivarPoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, a.field_.mul(ca, cb));
  return r;
}

UnivarPoly UnivarPoly::scaled(FieldElement c) const {
  UnivarPoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, field_.mul(v, c));
  return r;
}

// ----------------------------------------------------------------- BivarPoly

BivarPoly BivarPoly::constant(PrimeField field, FieldElement c) {
  return monomial(field, {0, 0}, c);
}

BivarPoly BivarPoly::monomial(PrimeField field, Monomial m, FieldElement c) {
  BivarPoly p(field);
  p.add_term(m, c);
  return p;
}

FieldElement BivarPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void BivarPoly::add_term(Monomial m, FieldElement c) { accumulate(field_, terms_, m, c); }

Order BivarPoly::order() const {
  if (terms_.empty()) return Order::infinity();
  Exponent best = terms_.begin()->first.total();
  for (const auto& [m, c] : terms_) best = std::min(best, m.total());
  return Order(best);
}

Exponent BivarPoly::total_degree() const noexcept {
  Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

Exponent BivarPoly::deg_x() const noexcept {
  Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

Exponent BivarPoly::deg_y() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.y;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  require_same_field(field_, rhs.field_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  require_same_field(field_, rhs.field_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, field_.neg(c));
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  require_same_field(a.field_, b.field_);
  BivarPoly r(a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.x + mb.x, ma.y + mb.y}, a.field_.mul(ca, cb));
  return r;
}

BivarPoly BivarPoly::scaled(FieldElement c) const {
  BivarPoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_.mul(v, c));
  return r;
}

BivarPoly BivarPoly::pow(std::uint64_t e) const {
  BivarPoly result = constant(field_, field_.one());
  BivarPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.y, m.x}, c);
  return r;
}

BivarPoly partial_x(const BivarPoly& f) {
  const auto& F = f.field();
  BivarPoly r(F);
  for (const auto& [m, c] : f.terms())
    if (m.x > 0) r.add_term({m.x - 1, m.y}, F.mul(c, F.from_int(m.x)));
  return r;
}

BivarPoly partial_y(const BivarPoly& f) {
  const auto& F = f.field();
  BivarPoly r(F);
  for (const auto& [m, c] : f.terms())
    if (m.y > 0) r.add_term({m.x, m.y - 1}, F.mul(c, F.from_int(m.y)));
  return r;
}

BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const auto& F = a.field();
  const auto [lead_m, lead_c] = *b.terms().rbegin();
  const FieldElement lead_inv = F.inv(lead_c);
  BivarPoly rem = a;
  BivarPoly quot(F);
  while (!rem.is_zero()) {
    const auto [rm, rc] = *rem.terms().rbegin();
    if (rm.x < lead_m.x || rm.y < lead_m.y)
      throw std::domain_error("exact_div: divisor does not divide dividend");
    const Monomial qm{rm.x - lead_m.x, rm.y - lead_m.y};
    const FieldElement qc = F.mul(rc, lead_inv);
    quot.add_term(qm, qc);
    rem -= b * BivarPoly::monomial(F, qm, qc);
  }
  return quot;
}

UnivarPoly substitute_param(const BivarPoly& h, Exponent n, const UnivarPoly& y) {
  const auto& F = h.field();
  UnivarPoly acc(F);
  if (h.is_zero()) return acc;
  // Coefficients of y^j as polynomials in t after x -> t^n.
  std::vector<UnivarPoly> by_power(h.deg_y() + 1, UnivarPoly(F));
  for (const auto& [m, c] : h.terms()) by_power[m.y].add_term(m.x * n, c);
  for (auto j = by_power.size(); j-- > 0;) {
    acc = acc * y;
    acc += by_power[j];
  }
  return acc;
}

// ---------------------------------------------------------------- resultant

int PolyInT::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (!coeffs[k].is_zero()) return k;
  return -1;
}

BivarPoly resultant_t(const PolyInT& a, const PolyInT& b) {
  const int m = a.degree();
  const int l = b.degree();
  if (m < 1 || l < 1)
    throw InputError(ErrorKind::DegenerateDegree, "resultant_t: both arguments need t-degree >= 1");
  const PrimeField F = a.coeffs[m].field();
  const int size = m + l;

  std::vector<std::vector<BivarPoly>> M(size, std::vector<BivarPoly>(size, BivarPoly(F)));
  for (int i = 0; i < l; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + m - k] = a.coeffs[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= l; ++k) M[l + i][i + l - k] = b.coeffs[k];

  bool negate = false;
  BivarPoly prev = BivarPoly::constant(F, F.one());
  for (int k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      int r = k + 1;
      while (r < size && M[r][k].is_zero()) ++r;
      if (r == size) return BivarPoly(F);
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = BivarPoly(F);
    }
    prev = M[k][k];
  }
  return negate ? -M[size - 1][size - 1] : M[size - 1][size - 1];
}

// ------------------------------------------------------------------ printing

namespace {

void append_term(std::ostringstream& os, bool first, FieldElement c, bool unit_part) {
  if (!first) os << " + ";
  if (c.value != 1 || unit_part) {
    os << c.value;
  }
}

}  // namespace

std::string to_string(const UnivarPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    append_term(os, first, c, e == 0);
    if (e > 0) {
      if (c.value != 1) os << '*';
      os << var;
      if (e > 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, FieldElement>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.y > b.first.y;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    append_term(os, first, c, m.total() == 0);
    bool need_star = c.value != 1;
    auto factor = [&](char v, Exponent e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      need_star = true;
    };
    factor('x', m.x);
    factor('y', m.y);
    first = false;
  }
  return os.str();
}

}  // namespace plbranch
