#ifndef CLEFT_LINALG_HPP
#define CLEFT_LINALG_HPP

#include <optional>
#include <vector>

#include "cleft/matrix.hpp"

namespace cleft {

template <class F>
struct RowEchelon {
  Matrix<F> mat;                   // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per pivot row
};

namespace detail {

// Serial reference elimination; the parallel path must match it exactly
// (pivoting is first-nonzero, so results are identical by construction).
template <class F>
RowEchelon<F> rref_serial(Matrix<F> m) {
  const F f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && f.is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    auto piv_inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(piv_inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
RowEchelon<F> rref_parallel(Matrix<F> m) {
  const F f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && f.is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    auto piv_inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(piv_inv, m(r, j));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace detail

template <class F>
RowEchelon<F> rref(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, GF>) {
    if (m.rows() * m.cols() >= (1u << 14)) return detail::rref_parallel(m);
  }
  return detail::rref_serial(m);
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

// Columns of the result form a basis of the right null space.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  auto re = rref(m);
  const F& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : re.pivots) is_pivot[c] = true;
  std::size_t k = m.cols() - re.pivots.size();
  Matrix<F> ker(f, m.cols(), k);
  std::size_t col = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    ker(c, col) = f.one();
    for (std::size_t r = 0; r < re.pivots.size(); ++r)
      ker(re.pivots[r], col) = f.neg(re.mat(r, c));
    ++col;
  }
  return ker;
}

// Some x with a*x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  auto re = rref(hstack(a, b));
  for (auto c : re.pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix<F> x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < re.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(re.pivots[r], j) = re.mat(r, a.cols() + j);
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix<F>::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

// Homology dimension at the middle of  A --d1--> B --d2--> C,
// i.e. dim ker(d2) - rank(d1). Requires d2*d1 = 0.
template <class F>
std::size_t homology_dim_at(const Matrix<F>& d1, const Matrix<F>& d2) {
  check_same_field(d1, d2);
  if (d2.cols() != d1.rows())
    throw std::invalid_argument("homology_dim_at: middle dimension mismatch");
  if (!mul(d2, d1).is_zero())
    throw std::invalid_argument("homology_dim_at: not a complex (d2*d1 != 0)");
  return (d2.cols() - rank(d2)) - rank(d1);
}

// Incremental span of row/column vectors, used for pivot-column selection,
// greedy basis extension and subspace closures. Deterministic: vectors are
// reduced against stored echelon rows in pivot order.
template <class F>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(F field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  // Returns true if v was independent of the current span (and was added).
  bool add(std::vector<typename F::Elem> v) {
    reduce(v);
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!field_.is_zero(v[j])) { lead = j; break; }
    if (lead == ambient_) return false;
    auto inv = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(inv, x);
    std::size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_.insert(pivot_.begin() + pos, lead);
    return true;
  }

  bool add_column(const Matrix<F>& m, std::size_t col) {
    std::vector<typename F::Elem> v(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) v[i] = m(i, col);
    return add(std::move(v));
  }

  bool contains(std::vector<typename F::Elem> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool contains_column(const Matrix<F>& m, std::size_t col) const {
    std::vector<typename F::Elem> v(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) v[i] = m(i, col);
    return contains(std::move(v));
  }

  // Basis vectors as matrix columns (echelonized representatives).
  Matrix<F> basis() const {
    Matrix<F> b(field_, ambient_, rows_.size());
    for (std::size_t c = 0; c < rows_.size(); ++c)
      for (std::size_t i = 0; i < ambient_; ++i) b(i, c) = rows_[c][i];
    return b;
  }

 private:
  void reduce(std::vector<typename F::Elem>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivot_[r]];
      if (field_.is_zero(c)) continue;
      auto factor = c;
      for (std::size_t j = pivot_[r]; j < ambient_; ++j)
        v[j] = field_.sub(v[j], field_.mul(factor, rows_[r][j]));
    }
  }

  F field_;
  std::size_t ambient_;
  std::vector<std::vector<typename F::Elem>> rows_;
  std::vector<std::size_t> pivot_;
};

// Indices of a maximal independent subset of columns, scanned left to right.
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
  IncrementalSpan<F> span(m.field(), m.rows());
  std::vector<std::size_t> idx;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (span.add_column(m, c)) idx.push_back(c);
  return idx;
}

template <class F>
Matrix<F> select_columns(const Matrix<F>& m, const std::vector<std::size_t>& idx) {
  Matrix<F> r(m.field(), m.rows(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, c) = m(i, idx[c]);
  return r;
}

} // namespace cleft

#endif
