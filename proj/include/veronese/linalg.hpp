#ifndef VERONESE_LINALG_HPP
#define VERONESE_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "veronese/field.hpp"

namespace veronese {

/// Arithmetic in F_p on 32-bit residues.
struct PrimeOps {
  using Elem = std::uint32_t;

  std::uint32_t p;

  Elem zero() const { return 0; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const { return inverse_mod(a, p); }
  Elem from_rational(const Rational& q) const { return residue(q, p); }
  Rational to_rational(Elem a) const { return Rational(a); }
};

/// Exact rational arithmetic.
struct RationalOps {
  using Elem = Rational;

  Elem zero() const { return 0; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem from_rational(const Rational& q) const { return q; }
  Rational to_rational(const Elem& a) const { return a; }
};

template <class Ops>
using SparseVector = std::vector<std::pair<std::uint32_t, typename Ops::Elem>>;

/// Incrementally built row echelon form.
///
/// Vectors are reduced against stored rows by their leading (smallest)
/// column; pivot selection is the first nonzero coordinate in index order,
/// so the result depends only on the insertion sequence.
template <class Ops>
class Echelon {
public:
  using Elem = typename Ops::Elem;
  using Vector = SparseVector<Ops>;

  Echelon(Ops ops, std::size_t ncols)
      : ops_(ops), ncols_(ncols), pivot_row_(ncols, -1), acc_(ncols, ops.zero()), queued_(ncols, 0) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when v is independent of the stored rows (and stores it).
  bool insert(const Vector& v) {
    Vector reduced = reduce(v);
    if (reduced.empty()) return false;
    pivot_row_[reduced.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(reduced));
    return true;
  }

  bool in_span(const Vector& v) { return reduce(v).empty(); }

  /// Basis of {x : r . x = 0 for every stored row r}, one vector per
  /// non-pivot column, in increasing order of that column.
  std::vector<Vector> nullspace() const {
    std::vector<Vector> full = fully_reduced();
    std::vector<std::int64_t> basis_of(ncols_, -1);
    std::vector<Vector> basis;
    for (std::uint32_t c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] >= 0) continue;
      basis_of[c] = static_cast<std::int64_t>(basis.size());
      basis.push_back(Vector{{c, one()}});
    }
    for (const auto& row : full) {
      std::uint32_t pivot = row.front().first;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto [c, v] = row[k];
        basis[static_cast<std::size_t>(basis_of[c])].push_back({pivot, ops_.neg(v)});
      }
    }
    for (auto& b : basis) std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return basis;
  }

private:
  Elem one() const { return ops_.from_rational(1); }

  void queue(std::uint32_t c) {
    if (!queued_[c]) {
      queued_[c] = 1;
      heap_.push(c);
    }
  }

  // Leaves acc_, queued_ and heap_ cleared on return.
  Vector reduce(const Vector& v) {
    for (const auto& [c, x] : v) {
      acc_[c] = ops_.add(acc_[c], x);
      queue(c);
    }
    while (!heap_.empty()) {
      std::uint32_t c = heap_.top();
      heap_.pop();
      queued_[c] = 0;
      if (ops_.is_zero(acc_[c])) continue;
      std::int64_t r = pivot_row_[c];
      if (r < 0) {
        Vector out;
        out.emplace_back(c, acc_[c]);
        acc_[c] = ops_.zero();
        while (!heap_.empty()) {
          std::uint32_t d = heap_.top();
          heap_.pop();
          queued_[d] = 0;
          if (!ops_.is_zero(acc_[d])) out.emplace_back(d, acc_[d]);
          acc_[d] = ops_.zero();
        }
        Elem scale = ops_.inv(out.front().second);
        for (auto& e : out) e.second = ops_.mul(e.second, scale);
        return out;
      }
      Elem factor = acc_[c];
      for (const auto& [d, y] : rows_[static_cast<std::size_t>(r)]) {
        acc_[d] = ops_.sub(acc_[d], ops_.mul(factor, y));
        if (d != c) queue(d);
      }
      acc_[c] = ops_.zero();
    }
    return {};
  }

  // Reduced row echelon form: every pivot column is zero outside its row.
  std::vector<Vector> fully_reduced() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    std::vector<Vector> done(rows_.size());
    std::vector<Elem> acc(ncols_, ops_.zero());
    std::vector<std::uint32_t> touched;
    for (std::size_t idx : order) {
      const Vector& row = rows_[idx];
      touched.clear();
      for (const auto& [c, x] : row) {
        acc[c] = x;
        touched.push_back(c);
      }
      // rows with larger pivots are already final
      std::sort(touched.begin(), touched.end());
      for (std::size_t t = 1; t < touched.size(); ++t) {
        std::uint32_t c = touched[t];
        if (ops_.is_zero(acc[c])) continue;
        std::int64_t r = pivot_row_[c];
        if (r < 0) continue;
        Elem factor = acc[c];
        for (const auto& [d, y] : done[static_cast<std::size_t>(r)]) {
          if (ops_.is_zero(acc[d]) && d != c) {
            auto pos = std::lower_bound(touched.begin() + static_cast<std::ptrdiff_t>(t) + 1, touched.end(), d);
            if (pos == touched.end() || *pos != d) touched.insert(pos, d);
          }
          acc[d] = ops_.sub(acc[d], ops_.mul(factor, y));
        }
      }
      Vector out;
      for (std::uint32_t c : touched) {
        if (!ops_.is_zero(acc[c])) out.emplace_back(c, acc[c]);
        acc[c] = ops_.zero();
      }
      done[idx] = std::move(out);
    }
    return done;
  }

  Ops ops_;
  std::size_t ncols_;
  std::vector<Vector> rows_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<Elem> acc_;
  std::vector<std::uint8_t> queued_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

}  // namespace veronese

#endif
