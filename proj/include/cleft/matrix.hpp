#ifndef CLEFT_MATRIX_HPP
#define CLEFT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cleft/field.hpp"

namespace cleft {

// Dense matrix over a field F, row-major. Values are immutable in spirit:
// all operations below are pure functions returning fresh matrices.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Elem& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
    return a_[i * cols_ + j];
  }
  const Elem& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
    return a_[i * cols_ + j];
  }

  std::vector<Elem>& data() { return a_; }
  const std::vector<Elem>& data() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j)
        os << (j ? " " : "") << field_.to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
void check_same_field(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.field() != b.field()) throw std::invalid_argument("mixed-field operands");
}

template <class F>
Matrix<F> make_matrix(F field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix<F> m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("make_matrix: ragged rows");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

template <class F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  Matrix<F> r = a;
  for (std::size_t k = 0; k < r.data().size(); ++k)
    r.data()[k] = a.field().add(a.data()[k], b.data()[k]);
  return r;
}

template <class F>
Matrix<F> sub(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("sub: shape mismatch");
  Matrix<F> r = a;
  for (std::size_t k = 0; k < r.data().size(); ++k)
    r.data()[k] = a.field().sub(a.data()[k], b.data()[k]);
  return r;
}

template <class F>
Matrix<F> neg(const Matrix<F>& a) {
  Matrix<F> r = a;
  for (auto& x : r.data()) x = a.field().neg(x);
  return r;
}

template <class F>
Matrix<F> scale(const typename F::Elem& c, const Matrix<F>& a) {
  Matrix<F> r = a;
  for (auto& x : r.data()) x = a.field().mul(c, x);
  return r;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> r(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<F> r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  Matrix<F> r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

namespace detail {

// Serial reference kernel, kept as the oracle the parallel path is tested against.
template <class F>
Matrix<F> mul_serial(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(a.field(), a.rows(), b.cols());
  const F& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
    }
  return r;
}

// GF(p) row kernel with a single reduction per output entry.
inline void mul_row_gf(const GF& f, const std::uint64_t* arow, std::size_t inner,
                       const std::uint64_t* b, std::size_t bcols, std::uint64_t* out) {
  for (std::size_t j = 0; j < bcols; ++j) out[j] = 0;
  for (std::size_t k = 0; k < inner; ++k) {
    std::uint64_t aik = arow[k];
    if (aik == 0) continue;
    const std::uint64_t* brow = b + k * bcols;
    for (std::size_t j = 0; j < bcols; ++j) out[j] += aik * brow[j];
  }
  for (std::size_t j = 0; j < bcols; ++j) out[j] %= f.p;
}

inline Matrix<GF> mul_parallel(const Matrix<GF>& a, const Matrix<GF>& b) {
  Matrix<GF> r(a.field(), a.rows(), b.cols());
  const GF f = a.field();
  const std::size_t n = a.rows(), inner = a.cols(), bc = b.cols();
  const std::uint64_t* ap = a.data().data();
  const std::uint64_t* bp = b.data().data();
  std::uint64_t* rp = r.data().data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < n; ++i)
    mul_row_gf(f, ap + i * inner, inner, bp, bc, rp + i * bc);
  return r;
}

constexpr std::size_t kParallelWork = 1u << 18;

} // namespace detail

template <class F>
Matrix<F> mul(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimension mismatch");
  if constexpr (std::is_same_v<F, GF>) {
    if (a.rows() * a.cols() * b.cols() >= detail::kParallelWork)
      return detail::mul_parallel(a, b);
  }
  return detail::mul_serial(a, b);
}

// Kronecker product for the fixed tensor basis ordering: the basis of U (x) V
// is enumerated as (u_i, v_j) with j running fastest, so
// kron(a,b)[i*rb + k][j*cb + l] = a[i][j] * b[k][l].
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  check_same_field(a, b);
  Matrix<F> r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const F& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& aij = a(i, j);
      if (f.is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
    }
  return r;
}

} // namespace cleft

#endif
