#include "veronese/random_curve.hpp"

#include <random>

#include "veronese/errors.hpp"

namespace veronese {

Polynomial random_curve(int d, std::uint64_t seed, Field field) {
  if (d < 2) throw PreconditionError("curve degree must be at least 2, got " + std::to_string(d));
  // raw engine output only, so the sequence is the same on every platform
  std::mt19937_64 rng(seed);
  std::vector<Term> terms;
  for (const Monomial& m : graded_basis(Ring::Curve, d)) {
    const bool pure_power = m.exps[0] == d || m.exps[1] == d || m.exps[2] == d;
    long c = 0;
    while (true) {
      c = static_cast<long>(rng() % 19) - 9;
      Rational reduced = field.normalize(Rational(c));
      if (!pure_power || reduced != 0) break;
    }
    terms.push_back({m, Rational(c)});
  }
  Polynomial f = Polynomial::from_terms(Ring::Curve, field, std::move(terms));
  return f;
}

}  // namespace veronese
