#include "veronese/lift.hpp"

namespace veronese {

namespace {

enum Ambient : std::size_t { X00, X01, X02, X11, X12, X22 };

// Parity class index 0..3 (I..IV) of an exponent triple: class I when all
// three exponents carry the distinguished parity (even for even degree, odd
// for odd degree), otherwise 1 + the index of the single one that does.
std::size_t parity_class(const Monomial& m, Parity parity) {
  const int marker = parity == Parity::Even ? 0 : 1;
  std::size_t matches = 0, which = 0;
  for (std::size_t v = 0; v < 3; ++v) {
    if (m.exps[v] % 2 == marker) {
      ++matches;
      which = v;
    }
  }
  if (matches == 3) return 0;
  if (matches == 1) return which + 1;
  throw std::logic_error("exponent parities inconsistent with the degree");
}

Monomial ambient(std::uint16_t a00, std::uint16_t a11, std::uint16_t a22) {
  Monomial m;
  m.exps[X00] = a00;
  m.exps[X11] = a11;
  m.exps[X22] = a22;
  return m;
}

Polynomial var(Ambient v, const Field& field) { return Polynomial::variable(Ring::Ambient, field, v); }

}  // namespace

Parity parity_of(int degree) { return degree % 2 == 0 ? Parity::Even : Parity::Odd; }

int curve_degree(const Polynomial& f) {
  if (f.ring() != Ring::Curve) throw RingMismatch("expected a polynomial in x0, x1, x2");
  auto d = f.homogeneous_degree();
  if (!d) throw PreconditionError("curve polynomial is not homogeneous");
  if (*d == kZeroPolynomialDegree) throw PreconditionError("curve polynomial is zero");
  return *d;
}

ParityParts parity_split(const Polynomial& f, Parity parity) {
  int d = curve_degree(f);
  if (parity_of(d) != parity) throw PreconditionError("parity does not match degree " + std::to_string(d));
  std::array<std::vector<Term>, 4> buckets;
  for (const auto& t : f.terms()) buckets[parity_class(t.monomial, parity)].push_back(t);
  auto make = [&](std::size_t i) { return Polynomial::from_terms(Ring::Curve, f.field(), buckets[i]); };
  return {{make(0), make(1), make(2), make(3)}};
}

EvenLift lift_even(const Polynomial& f) {
  int d = curve_degree(f);
  if (d % 2 != 0) throw PreconditionError("lift_even needs even degree, got " + std::to_string(d));
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto [i, j, k] = std::array<std::uint16_t, 3>{t.monomial.exps[0], t.monomial.exps[1], t.monomial.exps[2]};
    Monomial m;
    switch (parity_class(t.monomial, Parity::Even)) {
      case 0: m = ambient(i / 2, j / 2, k / 2); break;
      case 1: m = ambient(i / 2, (j - 1) / 2, (k - 1) / 2), ++m.exps[X12]; break;
      case 2: m = ambient((i - 1) / 2, j / 2, (k - 1) / 2), ++m.exps[X02]; break;
      default: m = ambient((i - 1) / 2, (j - 1) / 2, k / 2), ++m.exps[X01]; break;
    }
    terms.push_back({m, t.coeff});
  }
  return {Polynomial::from_terms(Ring::Ambient, f.field(), std::move(terms))};
}

OddLift lift_odd(const Polynomial& f) {
  int d = curve_degree(f);
  if (d % 2 == 0) throw PreconditionError("lift_odd needs odd degree, got " + std::to_string(d));
  if (d < 3) throw PreconditionError("lift_odd needs degree at least 3");
  std::array<std::vector<Term>, 4> h_terms;
  for (const auto& t : f.terms()) {
    auto [i, j, k] = std::array<std::uint16_t, 3>{t.monomial.exps[0], t.monomial.exps[1], t.monomial.exps[2]};
    std::size_t c = parity_class(t.monomial, Parity::Odd);
    Monomial m;
    switch (c) {
      case 0: m = ambient((i - 1) / 2, (j - 1) / 2, (k - 1) / 2); break;
      case 1: m = ambient((i - 1) / 2, j / 2, k / 2); break;
      case 2: m = ambient(i / 2, (j - 1) / 2, k / 2); break;
      default: m = ambient(i / 2, j / 2, (k - 1) / 2); break;
    }
    h_terms[c].push_back({m, t.coeff});
  }
  const Field& field = f.field();
  OddLift lift{{Polynomial(Ring::Ambient, field), Polynomial(Ring::Ambient, field),
                Polynomial(Ring::Ambient, field), Polynomial(Ring::Ambient, field)},
               {Polynomial(Ring::Ambient, field), Polynomial(Ring::Ambient, field),
                Polynomial(Ring::Ambient, field)}};
  for (std::size_t c = 0; c < 4; ++c) lift.h[c] = Polynomial::from_terms(Ring::Ambient, field, h_terms[c]);
  const auto& [hI, hII, hIII, hIV] = lift.h;
  auto x = [&](Ambient v) { return var(v, field); };
  lift.F[0] = x(X00) * x(X12) * hI + x(X00) * hII + x(X01) * hIII + x(X02) * hIV;
  lift.F[1] = x(X11) * x(X02) * hI + x(X01) * hII + x(X11) * hIII + x(X12) * hIV;
  lift.F[2] = x(X22) * x(X01) * hI + x(X02) * hII + x(X12) * hIII + x(X22) * hIV;
  return lift;
}

}  // namespace veronese
