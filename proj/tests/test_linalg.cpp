#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cleft/linalg.hpp"

using namespace cleft;

namespace {

const GF F7(7);
const GF F11(11);

template <class F>
Matrix<F> random_matrix(F f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix<F> m(f, r, c);
  std::uniform_int_distribution<long long> d(0, 30);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

} // namespace

TEST_CASE("rank: identity, zero, hand-eliminated example") {
  CHECK(rank(Matrix<GF>::identity(F7, 3)) == 3);
  CHECK(rank(Matrix<GF>(F7, 2, 5)) == 0);
  // [[1,2],[2,4]] over GF(7): second row is twice the first.
  CHECK(rank(make_matrix(F7, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel_basis: identity, zero, single row") {
  CHECK(kernel_basis(Matrix<GF>::identity(F7, 2)).cols() == 0);
  CHECK(kernel_basis(Matrix<GF>(F7, 2, 3)).cols() == 3);

  GF f5(5);
  auto m = make_matrix(f5, {{1, 1, 0}});
  auto k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK(mul(m, k).is_zero());
  CHECK(rank(k) == 2);
}

TEST_CASE("solve: identity, inconsistent, modular inverse") {
  auto b = make_matrix(F7, {{3}, {5}});
  auto x = solve(Matrix<GF>::identity(F7, 2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK_FALSE(solve(Matrix<GF>(F7, 1, 1), make_matrix(F7, {{3}})).has_value());

  // 2x = 3 over GF(7): x = 5 since 2*5 = 10 = 3 mod 7.
  auto y = solve(make_matrix(F7, {{2}}), make_matrix(F7, {{3}}));
  REQUIRE(y.has_value());
  CHECK((*y)(0, 0) == 5);
}

TEST_CASE("solve rejects row mismatch, ops reject mixed fields") {
  CHECK_THROWS_AS(solve(Matrix<GF>(F7, 2, 2), Matrix<GF>(F7, 3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(add(Matrix<GF>(F7, 2, 2), Matrix<GF>(F11, 2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(mul(Matrix<GF>(F7, 2, 2), Matrix<GF>(F11, 2, 2)), std::invalid_argument);
}

TEST_CASE("kron: identities, zero, hand expansion, ordering convention") {
  CHECK(kron(Matrix<GF>::identity(F7, 2), Matrix<GF>::identity(F7, 3)) ==
        Matrix<GF>::identity(F7, 6));
  CHECK(kron(Matrix<GF>(F7, 2, 2), make_matrix(F7, {{1, 2}, {3, 4}})).is_zero());

  GF f5(5);
  // (u_i, v_j) with j fastest: [[1,1]] (x) [[1,2]] = [[1,2,1,2]].
  CHECK(kron(make_matrix(f5, {{1, 1}}), make_matrix(f5, {{1, 2}})) ==
        make_matrix(f5, {{1, 2, 1, 2}}));
  // row (x) column expands blockwise.
  CHECK(kron(make_matrix(f5, {{1, 1}}), make_matrix(f5, {{1}, {2}})) ==
        make_matrix(f5, {{1, 1}, {2, 2}}));
}

TEST_CASE("homology_dim_at: spec cases") {
  auto id3 = Matrix<GF>::identity(F7, 3);
  CHECK(homology_dim_at(Matrix<GF>(F7, 3, 1), id3) == 0);
  CHECK(homology_dim_at(Matrix<GF>(F7, 3, 1), Matrix<GF>(F7, 2, 3)) == 3);

  // multiplication by x on k[x]/(x^2): ker = im = span{x}.
  auto nil = make_matrix(F7, {{0, 0}, {1, 0}});
  CHECK(homology_dim_at(nil, nil) == 0);

  CHECK_THROWS_AS(homology_dim_at(id3, id3), std::invalid_argument);
}

TEST_CASE("rank-nullity, solve soundness, kron mixed-product: random properties") {
  std::mt19937_64 rng(12345);
  for (auto p : {7u, 11u}) {
    GF f(p);
    for (int iter = 0; iter < 200; ++iter) {
      std::uniform_int_distribution<std::size_t> dim(0, 6);
      auto m = random_matrix(f, dim(rng), dim(rng), rng);
      CHECK(rank(m) + kernel_basis(m).cols() == m.cols());

      auto a = random_matrix(f, dim(rng), dim(rng), rng);
      auto xs = random_matrix(f, a.cols(), 2, rng);
      auto b = mul(a, xs);
      auto x = solve(a, b);
      REQUIRE(x.has_value());
      CHECK(mul(a, *x) == b);

      std::size_t n1 = dim(rng) % 4, n2 = dim(rng) % 4, n3 = dim(rng) % 4, n4 = dim(rng) % 4;
      auto A = random_matrix(f, n1, n2, rng);
      auto C = random_matrix(f, n2, n3, rng);
      auto B = random_matrix(f, n3, n4, rng);
      auto D = random_matrix(f, n4, n1, rng);
      CHECK(mul(kron(A, B), kron(C, D)) == kron(mul(A, C), mul(B, D)));
    }
  }
}

TEST_CASE("homology exactness criterion: h = 0 iff rank(d1) + rank(d2) = middle dim") {
  std::mt19937_64 rng(777);
  GF f(7);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::size_t mid = dim(rng);
    auto d2 = random_matrix(f, dim(rng), mid, rng);
    auto k = kernel_basis(d2);
    auto coeff = random_matrix(f, k.cols(), dim(rng), rng);
    auto d1 = mul(k, coeff); // image inside ker(d2), so a complex
    auto h = homology_dim_at(d1, d2);
    CHECK((h == 0) == (rank(d1) + rank(d2) == d2.cols()));
  }
}

TEST_CASE("parallel kernels agree with serial references") {
  std::mt19937_64 rng(99);
  GF f(7);
  for (auto n : {8u, 40u, 96u}) {
    auto a = random_matrix(f, n, n + 3, rng);
    auto b = random_matrix(f, n + 3, n, rng);
    CHECK(mul(a, b) == detail::mul_serial(a, b));
    auto re_par = rref(a);
    auto re_ser = detail::rref_serial(a);
    CHECK(re_par.mat == re_ser.mat);
    CHECK(re_par.pivots == re_ser.pivots);
  }
}

TEST_CASE("rationals: exact arithmetic and elimination") {
  QQ q;
  auto m = make_matrix(q, {{1, 2}, {3, 4}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(mul(m, *inv) == Matrix<QQ>::identity(q, 2));
  CHECK((*inv)(0, 0) == QQ::Elem(-2));
  CHECK((*inv)(0, 1) == QQ::Elem(1));
  CHECK((*inv)(1, 1) == q.from_fraction(-1, 2));
  CHECK(rank(make_matrix(q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("zero-dimensional edge cases") {
  Matrix<GF> z(F7, 0, 3);
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).cols() == 3);
  Matrix<GF> z2(F7, 3, 0);
  CHECK(rank(z2) == 0);
  CHECK(mul(z2, Matrix<GF>(F7, 0, 4)).is_zero());
  CHECK(kron(z, z2).rows() == 0);
  auto x = solve(z2, Matrix<GF>(F7, 3, 2));
  REQUIRE(x.has_value());
  CHECK(x->rows() == 0);
}

TEST_CASE("incremental span greediness is lowest-index-first") {
  auto m = make_matrix(F7, {{1, 2, 0}, {2, 4, 1}});
  auto idx = independent_columns(m);
  REQUIRE(idx.size() == 2);
  CHECK(idx[0] == 0);
  CHECK(idx[1] == 2);
}
