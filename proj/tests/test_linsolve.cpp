#include <gtest/gtest.h>

#include <random>

#include "pjp/error.hpp"
#include "pjp/linsolve.hpp"

using namespace pjp;

TEST(LinSolve, AgreesWithGauss) {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<int> d(-20, 20), den(1, 9);
  for (int n : {1, 2, 5, 12, 30}) {
    RMatrix A(n, RVec(n));
    RVec b(n);
    for (auto& row : A)
      for (auto& x : row) x = ratio(d(gen), den(gen));
    for (auto& x : b) x = ratio(d(gen), den(gen));
    RVec x = solve_exact(A, b);
    EXPECT_EQ(x, solve_gauss(A, b));
    for (int i = 0; i < n; ++i) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += A[i][j] * x[j];
      EXPECT_EQ(s, b[i]);
    }
  }
}

TEST(LinSolve, HilbertMatrix) {
  const int n = 14;
  RMatrix H(n, RVec(n));
  RVec b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) H[i][j] = ratio(1, i + j + 1);
    b[i] = 1;
  }
  EXPECT_EQ(solve_exact(H, b), solve_gauss(H, b));
}

TEST(LinSolve, Singular) {
  RMatrix A{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  try {
    solve_exact(A, {Rational(1), Rational(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularGram);
  }
}
