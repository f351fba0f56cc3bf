#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fundom/linalg.hpp"

using namespace fundom;

namespace {

Mat make(int rows, int cols, std::initializer_list<int> entries) {
  Mat m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Fp(*it++);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(Fp::modulus() == 32003);
  CHECK(Fp(32003).is_zero());
  CHECK(Fp(-1) == Fp(32002));
  CHECK(Fp(7) * Fp(7).inverse() == Fp(1));
  CHECK(Fp(12345) * Fp(12345).inverse() == Fp(1));
  CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Fp::set_modulus(32004), std::invalid_argument);
}

TEST_CASE("rref is deterministic and reduced") {
  Mat a = make(3, 4, {0, 2, 1, 3, 0, 4, 2, 6, 1, 1, 1, 1});
  Rref r = rref(a);
  CHECK(r.pivots == std::vector<int>{0, 1});
  // pivot columns are unit vectors
  for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
    for (int i = 0; i < 3; ++i)
      CHECK(r.m(i, r.pivots[pr]) == (i == static_cast<int>(pr) ? Fp(1) : Fp(0)));
  CHECK(rank(a) == 2);
}

TEST_CASE("kernel basis spans the kernel exactly") {
  Mat a = make(2, 4, {1, 2, 3, 4, 2, 4, 6, 8});
  Mat k = kernel_basis(a);
  CHECK(k.cols() == 3);
  Mat prod = a * k;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
  CHECK(rank(k) == 3);
}

TEST_CASE("solve finds a solution and detects inconsistency") {
  Mat a = make(3, 2, {1, 0, 0, 1, 1, 1});
  Vec b(3);
  b << Fp(2), Fp(3), Fp(5);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Fp(2));
  CHECK((*x)(1) == Fp(3));
  Vec c(3);
  c << Fp(2), Fp(3), Fp(6);
  CHECK(!solve(a, c).has_value());
}

TEST_CASE("column space basis picks first independent columns") {
  Mat a = make(3, 4, {1, 2, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0});
  Mat b = col_space_basis(a);
  CHECK(b.cols() == 2);
  CHECK(b.col(0) == a.col(0));
  CHECK(b.col(1) == a.col(2));
  CHECK(in_col_span(b, Vec(a.col(3))));
  Vec v(3);
  v << Fp(0), Fp(0), Fp(1);
  CHECK(!in_col_span(b, v));
}

TEST_CASE("coords_in_basis inverts the span relation") {
  Mat basis = make(3, 2, {1, 1, 0, 1, 0, 0});
  Mat b = make(3, 1, {3, 2, 0});
  Mat c = coords_in_basis(basis, b);
  Mat back = basis * c;
  CHECK(back == b);
  Mat bad = make(3, 1, {0, 0, 1});
  CHECK_THROWS_AS(coords_in_basis(basis, bad), std::invalid_argument);
}

TEST_CASE("quotient_dim checks containment") {
  Mat u = make(3, 2, {1, 0, 0, 1, 0, 0});
  Mat v = make(3, 1, {1, 1, 0});
  CHECK(quotient_dim(u, v) == 1);
  Mat w = make(3, 1, {0, 0, 1});
  CHECK_THROWS_AS(quotient_dim(u, w), std::invalid_argument);
  CHECK(quotient_dim(u, Mat(zeros(3, 0))) == 2);
}

TEST_CASE("stack and direct sum helpers") {
  Mat a = identity(2);
  Mat b = make(1, 1, {5});
  Mat d = direct_sum(a, b);
  CHECK(d.rows() == 3);
  CHECK(d(2, 2) == Fp(5));
  CHECK(d(0, 2).is_zero());
  Mat h = hstack(a, zeros(2, 1));
  CHECK(h.cols() == 3);
  Mat v = vstack(a, zeros(1, 2));
  CHECK(v.rows() == 3);
  Mat empty = zeros(2, 0);
  CHECK(hstack(empty, a) == a);
}
