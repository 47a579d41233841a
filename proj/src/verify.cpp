#include "veronese/verify.hpp"

#include <algorithm>

#include "veronese/errors.hpp"
#include "veronese/graded_piece.hpp"
#include "veronese/linalg.hpp"
#include "veronese/syzygy.hpp"
#include "veronese/veronese_map.hpp"

namespace veronese {

namespace {

Polynomial reduce_poly(const Polynomial& p, Field field) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  return Polynomial::from_terms(p.ring(), field, std::move(terms));
}

int max_twist(const ResolutionComplex& c) {
  int top = 0;
  for (const auto& m : c.modules)
    for (int a : m.twists) top = std::max(top, a);
  return top;
}

std::uint64_t piece_rank(const GradedMatrix& d, int n, const PrimeOps& ops) {
  if (d.source.graded_dimension(n) == 0 || d.target.graded_dimension(n) == 0) return 0;
  // curve summands lead the coordinate order so the linear Veronese columns
  // find their pivots without touching them
  PieceCoordinates target(Ring::Ambient, d.target.twists, n, true);
  auto columns = piece_columns(d.entries, Ring::Ambient, d.source.twists, target, n, ops);
  return rank_of(columns, target.size(), ops);
}

// d_i d_{i+1} as a map E_{i+1} -> E_{i-1}
GradedMatrix composition(const GradedMatrix& a, const GradedMatrix& b, Field field) {
  return {b.source, a.target, multiply(a.entries, b.entries, Polynomial(Ring::Ambient, field))};
}

bool is_zero_matrix(const Matrix<Polynomial>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

}  // namespace

CheckResult check_complex(const ResolutionComplex& c) {
  c.validate_shapes();
  for (std::size_t i = 1; i < c.length(); ++i) {
    const auto& a = c.d(i).entries;
    const auto& b = c.d(i + 1).entries;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t col = 0; col < b.cols(); ++col) {
        Polynomial sum(Ring::Ambient, c.field);
        for (std::size_t k = 0; k < a.cols(); ++k)
          if (!a(r, k).is_zero() && !b(k, col).is_zero()) sum += a(r, k) * b(k, col);
        if (!sum.is_zero())
          return {false, Witness{i, r, col, sum},
                  "d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " is nonzero at (" + std::to_string(r) +
                      ", " + std::to_string(col) + "): " + render(sum)};
      }
    }
  }
  return {true, std::nullopt, "all compositions vanish"};
}

CheckResult check_minimal(const ResolutionComplex& c) {
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const auto& e = c.d(i).entries;
    for (std::size_t r = 0; r < e.rows(); ++r)
      for (std::size_t col = 0; col < e.cols(); ++col)
        if (e(r, col).is_nonzero_constant())
          return {false, Witness{i, r, col, e(r, col)},
                  "d_" + std::to_string(i) + " has the unit entry " + render(e(r, col)) + " at (" +
                      std::to_string(r) + ", " + std::to_string(col) + ")"};
  }
  return {true, std::nullopt, "no entry is a nonzero constant"};
}

CheckResult theta_vanishing_check(const ResolutionComplex& c) {
  if (c.length() == 0) return {true, std::nullopt, "empty complex"};
  const auto& e = c.d(1).entries;
  for (std::size_t col = 0; col < e.cols(); ++col) {
    Polynomial image = theta(e(0, col));
    Polynomial rest = c.curve ? divide(image, c.curve->f).remainder : image;
    if (!rest.is_zero())
      return {false, Witness{1, 0, col, rest},
              "theta of generator " + std::to_string(col) + " leaves the remainder " + render(rest)};
  }
  return {true, std::nullopt, c.curve ? "every generator maps into (f)" : "every generator maps to zero"};
}

BettiTable betti_table(const ResolutionComplex& c) {
  BettiTable table;
  for (std::size_t i = 0; i < c.modules.size(); ++i)
    for (int a : c.modules[i].twists) table.add(static_cast<int>(i), a);
  return table;
}

std::int64_t hilbert_from_resolution(const ResolutionComplex& c, int n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    auto dim = static_cast<std::int64_t>(c.modules[i].graded_dimension(n));
    total += i % 2 == 0 ? dim : -dim;
  }
  return total;
}

std::int64_t hilbert_oracle(int d, int n) {
  if (d < 1 || n < 0) throw PreconditionError("hilbert_oracle needs d >= 1 and n >= 0");
  auto whole = static_cast<std::int64_t>(binomial(2 * n + 2, 2));
  if (2 * n < d) return whole;
  return whole - static_cast<std::int64_t>(binomial(2 * n - d + 2, 2));
}

std::int64_t expected_hilbert(const ResolutionComplex& c, int n) {
  if (c.curve) return hilbert_oracle(c.curve->degree, n);
  return static_cast<std::int64_t>(binomial(2 * n + 2, 2));
}

ResolutionComplex reduce_to(const ResolutionComplex& c, Field field) {
  ResolutionComplex out = c;
  out.field = field;
  for (auto& d : out.differentials)
    for (std::size_t r = 0; r < d.entries.rows(); ++r)
      for (std::size_t col = 0; col < d.entries.cols(); ++col) d.entries(r, col) = reduce_poly(d.entries(r, col), field);
  return out;
}

bool ExactnessReport::exact() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& x) { return x.verdict == Verdict::Exact; }) &&
         std::all_of(ideal.begin(), ideal.end(), [](const auto& x) { return x.pass; });
}

std::optional<std::string> ExactnessReport::first_failure() const {
  for (const auto& x : ideal)
    if (!x.pass)
      return "image of d_1 in degree " + std::to_string(x.degree) + " has dimension " + std::to_string(x.image_dim) +
             ", expected " + std::to_string(x.expected);
  for (const auto& x : cells) {
    if (x.verdict == Verdict::Homology)
      return "homology of dimension " + std::to_string(x.homology) + " at E_" + std::to_string(x.position) +
             " in degree " + std::to_string(x.degree);
    if (x.verdict == Verdict::NotComplex)
      return "image of d_" + std::to_string(x.position + 1) + " leaves ker d_" + std::to_string(x.position) +
             " in degree " + std::to_string(x.degree);
  }
  return std::nullopt;
}

ExactnessReport graded_exactness(const ResolutionComplex& c, int n_max, std::uint32_t prime) {
  if (!is_prime(prime)) throw PreconditionError(std::to_string(prime) + " is not prime");
  if (c.curve && prime <= static_cast<std::uint32_t>(c.curve->degree))
    throw PreconditionError("prime " + std::to_string(prime) + " must exceed the curve degree " +
                            std::to_string(c.curve->degree));
  if (c.field.is_prime_field() && c.field.characteristic() != prime)
    throw PreconditionError("complex is defined over " + c.field.descriptor() + ", not F_" + std::to_string(prime));
  if (n_max < max_twist(c))
    throw PreconditionError("degree bound " + std::to_string(n_max) + " is below the largest twist " +
                            std::to_string(max_twist(c)));
  c.validate_shapes();

  const PrimeOps ops{prime};
  const ResolutionComplex reduced = reduce_to(c, Field::prime(prime));
  const std::size_t len = reduced.length();
  // ranks[i][n] = rank of d_i at degree n, with d_{len+1} = 0
  std::vector<std::vector<std::uint64_t>> ranks(len + 2, std::vector<std::uint64_t>(n_max + 1, 0));
  for (std::size_t i = 1; i <= len; ++i)
    for (int n = 0; n <= n_max; ++n) ranks[i][n] = piece_rank(reduced.d(i), n, ops);
  // composition ranks, zero for a genuine complex
  std::vector<std::vector<std::uint64_t>> composed(len + 1, std::vector<std::uint64_t>(n_max + 1, 0));
  for (std::size_t i = 1; i < len; ++i) {
    GradedMatrix p = composition(reduced.d(i), reduced.d(i + 1), reduced.field);
    if (is_zero_matrix(p.entries)) continue;
    for (int n = 0; n <= n_max; ++n) composed[i][n] = piece_rank(p, n, ops);
  }

  ExactnessReport report{prime, n_max, {}, {}};
  for (std::size_t i = 1; i <= len; ++i) {
    for (int n = 0; n <= n_max; ++n) {
      ExactnessCell cell{i, n, reduced.modules[i].graded_dimension(n), ranks[i][n], 0, ranks[i + 1][n],
                         composed[i][n], Verdict::Exact, 0};
      cell.kernel = cell.dim - cell.rank;
      cell.homology = cell.kernel - (cell.rank_next - cell.composition_rank);
      if (cell.homology > 0)
        cell.verdict = Verdict::Homology;
      else if (cell.composition_rank > 0)
        cell.verdict = Verdict::NotComplex;
      report.cells.push_back(cell);
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    const auto ambient = static_cast<std::int64_t>(binomial(n + 5, 5));
    const auto expected = static_cast<std::uint64_t>(ambient - expected_hilbert(c, n));
    const std::uint64_t image = len >= 1 ? ranks[1][n] : 0;
    report.ideal.push_back({n, image, expected, image == expected});
  }
  return report;
}

SpanComparison compare_with_oracle(const ResolutionComplex& c, int n, std::uint32_t prime) {
  if (c.length() < 2) throw PreconditionError("complex has no second differential");
  const Field field = Field::prime(prime);
  const ResolutionComplex reduced = reduce_to(c, field);
  const PrimeOps ops{prime};
  const GradedMatrix& d1 = reduced.d(1);
  const GradedMatrix& d2 = reduced.d(2);

  std::vector<Polynomial> gens;
  for (std::size_t col = 0; col < d1.entries.cols(); ++col) gens.push_back(d1.entries(0, col));
  std::vector<PolyVector> oracle = syzygy_oracle(gens, n);

  PieceCoordinates coords(Ring::Ambient, d2.target.twists, n, true);
  std::vector<SparseVector<PrimeOps>> oracle_vectors;
  for (const auto& v : oracle) {
    SparseVector<PrimeOps> coords_v;
    for (std::size_t k = 0; k < v.size(); ++k)
      for (const auto& t : v[k].terms())
        coords_v.emplace_back(static_cast<std::uint32_t>(coords.index(k, t.monomial)), ops.from_rational(t.coeff));
    std::sort(coords_v.begin(), coords_v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    oracle_vectors.push_back(std::move(coords_v));
  }
  auto image = piece_columns(d2.entries, Ring::Ambient, d2.source.twists, coords, n, ops);

  SpanComparison out{n, rank_of(oracle_vectors, coords.size(), ops), rank_of(image, coords.size(), ops), 0};
  std::vector<SparseVector<PrimeOps>> stacked = oracle_vectors;
  stacked.insert(stacked.end(), image.begin(), image.end());
  out.stacked_rank = rank_of(stacked, coords.size(), ops);
  return out;
}

int default_degree_bound(const ResolutionComplex& c) {
  if (!c.curve) return 8;
  const int d = c.curve->degree;
  const int m = d % 2 == 0 ? d / 2 : (d + 1) / 2;
  return m + 6;
}

}  // namespace veronese
