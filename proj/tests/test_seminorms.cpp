#include "doctest.h"
#include "oracles.hpp"
#include "powser/literals.hpp"
#include "powser/sampler.hpp"
#include "powser/seminorms.hpp"

using namespace powser;

TEST_CASE("coefficient-window seminorm sums absolute values in the window") {
  const TruncationCtx ctx{2, 2};
  const TensorSeries a = parse_tensor("1 + 2*X0.X1 - 3*X2", ctx);
  CHECK(tau_c_seminorm(a, 2, 2) == 6);
  CHECK(tau_c_seminorm(a, 1, 2) == 3);  // X2 falls outside n=1
  CHECK(tau_c_seminorm(a, 2, 1) == 4);  // X0.X1 falls outside m=1
  CHECK(tau_c_seminorm(a, 2, 0) == 1);
  CHECK(tau_c_seminorm(TensorSeries::zero(ctx), 2, 2) == 0);
  CHECK(tau_c_seminorm(TensorSeries::unit(ctx), 0, 0) == 1);
}

TEST_CASE("functional-window seminorm matches the blunt double sum") {
  Sampler rng(31);
  for (int t = 0; t < 150; ++t) {
    const TruncationCtx ctx{3, 3};
    const TensorSeries a = rng.tensor_series(ctx, 6, 3);
    const Letter n = rng.uniform(0, 3);
    const std::uint32_t m = rng.uniform(0, 3);
    const Letter i = rng.uniform(1, 3);
    const bool corrupt = rng.uniform(0, 1) == 1;
    const FunctionalFamily fam = FunctionalFamily::psi_at(i, corrupt);
    CHECK(tau_i_seminorm(a, n, m, fam) ==
          oracle::tau_i_closed_form(a, n, m, fam));
  }
}

TEST_CASE("functional-window seminorm with the coordinate family is tau_c") {
  Sampler rng(37);
  const TruncationCtx ctx{3, 3};
  for (int t = 0; t < 100; ++t) {
    const TensorSeries a = rng.tensor_series(ctx, 6, 3);
    const Letter n = rng.uniform(0, 3);
    const std::uint32_t m = rng.uniform(0, 4);
    CHECK(tau_i_seminorm(a, n, m, FunctionalFamily::coordinate()) ==
          tau_c_seminorm(a, n, m));
  }
}

TEST_CASE("frozen values of the null-sequence witness") {
  const TruncationCtx ctx{6, 4};
  const FunctionalFamily fam = FunctionalFamily::psi_at(1);
  const TensorSeries a =
      TensorSeries::generator(3, ctx) - TensorSeries::generator(1, ctx);
  // The summing functional cancels X_3 - X_1 on every window below 3 ...
  CHECK(tau_i_seminorm(a, 1, 2, fam) == 0);
  CHECK(tau_i_seminorm(a, 2, 4, fam) == 0);
  // ... and the coordinate row at 3 contributes exactly 1 afterwards.
  CHECK(tau_i_seminorm(a, 3, 1, fam) == 1);
  CHECK(tau_i_seminorm(a, 6, 4, fam) == 1);
  // The plain coefficient window sees the sequence at every n >= 1.
  CHECK(tau_c_seminorm(a, 1, 1) == 1);
  CHECK(tau_c_seminorm(a, 3, 1) == 2);
}

TEST_CASE("diagonal sequences through the symmetrization embedding") {
  const TruncationCtx ctx{6, 2};
  const CommSeries one = CommSeries::unit(ctx);
  for (std::uint32_t k = 0; k <= 4; ++k) {
    CHECK(p_k(one, k) == 1);
    CHECK(p_prime_k(one, k, 1) == 1);
  }
  // p'_{k,j}(X_N - X_i) = [i <= k] + [N <= k] for i, N != j.
  const CommSeries x =
      CommSeries::generator(4, ctx) - CommSeries::generator(1, ctx);
  CHECK(p_prime_k(x, 0, 3) == 0);
  CHECK(p_prime_k(x, 2, 3) == 1);
  CHECK(p_prime_k(x, 4, 3) == 2);
  // p'_{k,j}(X_N - X_j) = [N <= k].
  const CommSeries y =
      CommSeries::generator(2, ctx) - CommSeries::generator(1, ctx);
  CHECK(p_prime_k(y, 1, 1) == 0);
  CHECK(p_prime_k(y, 2, 1) == 1);
  CHECK(p_prime_k(y, 4, 1) == 1);
  // The plain diagonal p_k counts both generators once inside the window.
  CHECK(p_k(x, 4) == 2);
  CHECK(p_k(x, 1) == 1);
  CHECK(p_k(x, 0) == 0);
}

TEST_CASE("seminorm dispatch and labels") {
  const TruncationCtx ctx{2, 2};
  const TensorSeries a = parse_tensor("X1 + X2", ctx);
  const SeminormSpec coord{FunctionalFamily::coordinate(), 2, 2};
  CHECK(seminorm_value(coord, a) == 2);
  CHECK(coord.label() == "tau_c[coordinate,n=2,m=2]");
  const SeminormSpec summing{FunctionalFamily::psi_at(1), 2, 2};
  CHECK(summing.label() == "tau_i[psi@1,n=2,m=2]");
  // Row at 1 sums both coefficients (2), row at 2 reads X2 (1).
  CHECK(seminorm_value(summing, a) == 3);
}

TEST_CASE("submultiplicativity spot checks") {
  Sampler rng(41);
  const TruncationCtx ctx{3, 3};
  for (int t = 0; t < 100; ++t) {
    const TensorSeries a = rng.tensor_series(ctx, 4, 3);
    const TensorSeries b = rng.tensor_series(ctx, 4, 3);
    const Letter n = rng.uniform(0, 3);
    const std::uint32_t m = rng.uniform(0, 3);
    CHECK(tau_c_seminorm(mul(a, b), n, m) <=
          tau_c_seminorm(a, n, m) * tau_c_seminorm(b, n, m));
    const FunctionalFamily fam = FunctionalFamily::psi_at(rng.uniform(1, 3));
    CHECK(tau_i_seminorm(mul(a, b), n, m, fam) <=
          tau_i_seminorm(a, n, m, fam) * tau_i_seminorm(b, n, m, fam));
  }
}
