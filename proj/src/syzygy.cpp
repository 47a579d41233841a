#include "veronese/syzygy.hpp"

#include "veronese/errors.hpp"
#include "veronese/graded_piece.hpp"
#include "veronese/linalg.hpp"

namespace veronese {

namespace {

template <class Ops>
std::vector<PolyVector> oracle(std::span<const PolyVector> gens, std::span<const int> row_twists, int n,
                               const Ops& ops) {
  const Polynomial& sample = gens.front().front();
  const Ring ring = sample.ring();
  const Field field = sample.field();
  std::vector<int> degrees;
  Matrix<Polynomial> macaulay(row_twists.size(), gens.size(), Polynomial(ring, field));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    degrees.push_back(module_degree(gens[k], row_twists));
    for (std::size_t r = 0; r < row_twists.size(); ++r) macaulay(r, k) = gens[k][r];
  }
  std::vector<int> twists(row_twists.begin(), row_twists.end());
  PieceCoordinates target(ring, twists, n);
  PieceCoordinates unknowns(ring, degrees, n);
  auto columns = piece_columns(macaulay, ring, degrees, target, n, ops);

  // equations: one row per target coordinate
  std::vector<SparseVector<Ops>> equations(target.size());
  for (std::uint32_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, v] : columns[j]) equations[i].emplace_back(j, v);
  Echelon<Ops> echelon(ops, unknowns.size());
  for (const auto& eq : equations) echelon.insert(eq);

  std::vector<std::pair<std::size_t, std::size_t>> owner(unknowns.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < unknowns.monomials(k).size(); ++i) owner[unknowns.offset(k) + i] = {k, i};

  std::vector<PolyVector> basis;
  for (const auto& null_vector : echelon.nullspace()) {
    std::vector<std::vector<Term>> terms(gens.size());
    for (const auto& [j, v] : null_vector) {
      auto [k, i] = owner[j];
      terms[k].push_back({unknowns.monomials(k)[i], ops.to_rational(v)});
    }
    PolyVector out;
    for (auto& t : terms) out.push_back(Polynomial::from_terms(ring, field, std::move(t)));
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace

int module_degree(const PolyVector& v, std::span<const int> row_twists) {
  if (v.size() != row_twists.size()) throw PreconditionError("vector length does not match the module rank");
  std::optional<int> degree;
  for (std::size_t r = 0; r < v.size(); ++r) {
    auto d = v[r].homogeneous_degree();
    if (!d) throw PreconditionError("generator entry is not homogeneous");
    if (*d == kZeroPolynomialDegree) continue;
    int total = *d + row_twists[r];
    if (degree && *degree != total) throw PreconditionError("generator is not homogeneous in the module grading");
    degree = total;
  }
  if (!degree) throw PreconditionError("zero generator has no degree");
  return *degree;
}

std::vector<PolyVector> module_syzygy_oracle(std::span<const PolyVector> gens, std::span<const int> row_twists,
                                             int n) {
  if (gens.empty()) return {};
  for (const auto& g : gens)
    if (g.size() != row_twists.size()) throw PreconditionError("generator length does not match the module rank");
  const Field field = gens.front().front().field();
  if (field.is_prime_field()) return oracle(gens, row_twists, n, PrimeOps{field.characteristic()});
  return oracle(gens, row_twists, n, RationalOps{});
}

std::vector<PolyVector> syzygy_oracle(std::span<const Polynomial> gens, int n) {
  std::vector<PolyVector> vectors;
  for (const auto& g : gens) vectors.push_back({g});
  const int twist = 0;
  return module_syzygy_oracle(vectors, std::span<const int>(&twist, 1), n);
}

}  // namespace veronese
