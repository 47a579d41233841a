#include "veronese/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace veronese {

namespace {

constexpr std::array<std::string_view, 3> kCurveNames{"x0", "x1", "x2"};
constexpr std::array<std::string_view, 6> kAmbientNames{"x00", "x01", "x02", "x11", "x12", "x22"};

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field())
    throw RingMismatch("field mismatch: " + a.field().descriptor() + " vs " + b.field().descriptor());
}

using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

Polynomial from_map(Ring ring, Field field, const TermMap& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial::from_terms(ring, field, std::move(terms));
}

}  // namespace

std::size_t arity(Ring ring) { return ring == Ring::Curve ? 3 : 6; }

std::span<const std::string_view> variable_names(Ring ring) {
  if (ring == Ring::Curve) return kCurveNames;
  return kAmbientNames;
}

std::string_view ring_name(Ring ring) { return ring == Ring::Curve ? "curve" : "ambient"; }

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxArity; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxArity; ++i) r.exps[i] = exps[i] + other.exps[i];
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxArity; ++i) r.exps[i] = other.exps[i] - exps[i];
  return r;
}

std::uint64_t Monomial::key() const {
  std::uint64_t k = 0;
  for (auto e : exps) k = (k << 10) | (e & 0x3ffu);
  return k;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = kMaxArity; i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return b.exps[i] <=> a.exps[i];
  }
  return std::strong_ordering::equal;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring())
    throw RingMismatch("ring mismatch: " + std::string(ring_name(a.ring())) + " vs " +
                       std::string(ring_name(b.ring())));
  require_same_field(a, b);
}

Polynomial Polynomial::constant(Ring ring, Field field, const Rational& c) {
  return monomial(ring, field, Monomial{}, c);
}

Polynomial Polynomial::variable(Ring ring, Field field, std::size_t index) {
  if (index >= arity(ring)) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exps[index] = 1;
  return monomial(ring, field, m);
}

Polynomial Polynomial::monomial(Ring ring, Field field, const Monomial& m, const Rational& c) {
  return from_terms(ring, field, {Term{m, c}});
}

Polynomial Polynomial::from_terms(Ring ring, Field field, std::vector<Term> terms) {
  for (const auto& t : terms)
    for (std::size_t i = arity(ring); i < kMaxArity; ++i)
      if (t.monomial.exps[i] != 0) throw RingMismatch("monomial does not belong to the ring");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex(a.monomial, b.monomial) > 0; });
  Polynomial p(ring, field);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [&](Term& t) {
    t.coeff = field.normalize(t.coeff);
    return sgn(t.coeff) == 0;
  });
  return p;
}

bool Polynomial::is_nonzero_constant() const {
  return terms_.size() == 1 && terms_.front().monomial.degree() == 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grevlex(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return kZeroPolynomialDegree;
  int d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return std::nullopt;
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity(ring_)) throw std::invalid_argument("point has wrong arity");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.monomial.exps[i]; ++e) v *= point[i];
    total += v;
  }
  return field_.normalize(total);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial, t.coeff * c});
  return from_terms(ring_, field_, std::move(terms));
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial p(ring_, field_);
  p.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves grevlex order
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff});
  for (std::size_t i = arity(ring_); i < kMaxArity; ++i)
    if (m.exps[i] != 0) throw RingMismatch("monomial does not belong to the ring");
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::vector<Term> terms;
  terms.reserve(a.size() + b.size());
  terms.insert(terms.end(), a.terms_.begin(), a.terms_.end());
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(a.ring_, a.field_, std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  TermMap acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  return from_map(a.ring_, a.field_, acc);
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto names = variable_names(p.ring());
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        out << '-';
        c = -c;
      }
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.monomial.degree() == 0) {
      out << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < arity(p.ring()); ++i) {
      int e = t.monomial.exps[i];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

std::vector<Monomial> graded_basis(Ring ring, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  const std::size_t k = arity(ring);
  Monomial m;
  // enumerate compositions of n into k parts
  auto rec = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == k) {
      m.exps[slot] = static_cast<std::uint16_t>(remaining);
      out.push_back(m);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.exps[slot] = static_cast<std::uint16_t>(e);
      self(self, slot + 1, remaining - e);
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::vector<Rational> coeff_vector(const Polynomial& p, int n) {
  auto d = p.homogeneous_degree();
  if (!d || (*d != n && *d != kZeroPolynomialDegree))
    throw std::invalid_argument("coeff_vector: polynomial is not homogeneous of degree " +
                                std::to_string(n));
  GradedBasis basis(p.ring(), n);
  std::vector<Rational> out(basis.size(), 0);
  for (const auto& t : p.terms()) out[basis.index_of(t.monomial)] = t.coeff;
  return out;
}

GradedBasis::GradedBasis(Ring ring, int degree) : degree_(degree), basis_(graded_basis(ring, degree)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].key(), i);
}

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) throw std::out_of_range("monomial not in graded piece");
  return it->second;
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  require_same_ring(dividend, divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const Field& field = dividend.field();
  const Term& lead = divisor.leading_term();
  const Rational lead_inv = field.inv(lead.coeff);

  TermMap rest;
  for (const auto& t : dividend.terms()) rest[t.monomial] = t.coeff;
  TermMap quotient, remainder;
  while (!rest.empty()) {
    auto it = rest.begin();
    Monomial m = it->first;
    Rational c = field.normalize(it->second);
    rest.erase(it);
    if (sgn(c) == 0) continue;
    if (!lead.monomial.divides(m)) {
      remainder[m] = c;
      continue;
    }
    Monomial q = lead.monomial.quotient_of(m);
    Rational qc = field.mul(c, lead_inv);
    quotient[q] += qc;
    for (const auto& t : divisor.terms().subspan(1)) {
      Monomial mm = t.monomial * q;
      rest[mm] -= qc * t.coeff;
    }
  }
  return {from_map(dividend.ring(), field, quotient), from_map(dividend.ring(), field, remainder)};
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace veronese
