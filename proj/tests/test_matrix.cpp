#include <doctest.h>

#include "oracles.hpp"
#include "spectra/errors.hpp"
#include "spectra/matrix.hpp"
#include "spectra/workloads.hpp"

using namespace spectra;

namespace {

DemandMatrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return DemandMatrix(m);
}

}  // namespace

TEST_CASE("demand matrix rejects invalid entries") {
  CHECK_THROWS_AS(DemandMatrix(Matrix::Zero(2, 3)), DimensionError);
  CHECK_THROWS_AS(mat2(-0.1, 0, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(mat2(std::numeric_limits<double>::quiet_NaN(), 0, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(mat2(std::numeric_limits<double>::infinity(), 0, 0, 0), InvalidArgument);
}

TEST_CASE("matching rejects repeated targets") {
  CHECK_THROWS_AS(PermutationMatching({0, 0}), InvalidArgument);
  CHECK_THROWS_AS(PermutationMatching({2, kUnmatched}), InvalidArgument);
  const PermutationMatching m({kUnmatched, 0});
  CHECK(m.size() == 1);
  CHECK(m.contains(1, 0));
  CHECK_FALSE(m.contains(0, 0));
}

TEST_CASE("support") {
  const SupportMatrix s = support(mat2(0.5, 0, 0, 0.5));
  CHECK(s(0, 0));
  CHECK_FALSE(s(0, 1));
  CHECK_FALSE(s(1, 0));
  CHECK(s(1, 1));
  CHECK_FALSE(support(DemandMatrix::zeros(3)).any());
  CHECK(support(mat2(0.3, 0.7, 0.7, 0.3)).all());
}

TEST_CASE("degree") {
  for (int n : {1, 3, 7}) CHECK(degree(SupportMatrix(Matrix::Identity(n, n).array() > 0.0)) == 1);
  CHECK(degree(SupportMatrix::Constant(4, 4, true)) == 4);
  CHECK(degree(SupportMatrix::Constant(4, 4, false)) == 0);

  SUBCASE("invariant under positive rescaling") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      const DemandMatrix d = testing::random_matrix(rng, 6, 0.4);
      const double scale = 0.01 + 10.0 * rng.uniform01();
      CHECK(degree(support(d)) == degree(support(DemandMatrix(d.values() * scale))));
    }
  }
}

TEST_CASE("covers") {
  const DemandMatrix id(Matrix::Identity(3, 3));
  WeightedDecomposition dec{{{PermutationMatching::identity(3), 1.0}}};
  CHECK(covers(dec, id, 0.0));
  dec.terms[0].weight = 0.9;
  CHECK_FALSE(covers(dec, id, 1e-9));

  SUBCASE("toy decomposition covers the toy matrix") {
    const WeightedDecomposition toy{{{PermutationMatching::identity(3), 0.61},
                                     {PermutationMatching::cyclic_shift(3, 1), 0.3},
                                     {PermutationMatching::cyclic_shift(3, 2), 0.1}}};
    CHECK(covers(toy, testing::toy_matrix(), 0.0));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(covers(dec, DemandMatrix(Matrix::Identity(2, 2)), 0.0), DimensionError);
  }
  SUBCASE("monotone in weights") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
      const DemandMatrix d = testing::random_matrix(rng, 4, 0.5);
      WeightedDecomposition w;
      for (int i = 0; i < 4; ++i) w.terms.push_back({PermutationMatching::cyclic_shift(4, i), 1.0});
      REQUIRE(covers(w, d, 0.0));
      for (auto& term : w.terms) term.weight += rng.uniform01();
      CHECK(covers(w, d, 0.0));
    }
  }
}

TEST_CASE("normalize_doubly_stochastic") {
  auto r = normalize_doubly_stochastic(mat2(2, 0, 0, 2));
  CHECK_FALSE(r.fallback);
  CHECK(r.matrix.values().isApprox(Matrix::Identity(2, 2)));

  r = normalize_doubly_stochastic(mat2(1, 1, 1, 1));
  CHECK_FALSE(r.fallback);
  CHECK(r.matrix.values().isApprox(Matrix::Constant(2, 2, 0.5)));

  r = normalize_doubly_stochastic(mat2(1, 1, 0, 1));
  CHECK(r.fallback);
  CHECK(r.matrix == mat2(0.5, 0.5, 0, 0.5));

  CHECK_THROWS_AS(normalize_doubly_stochastic(DemandMatrix::zeros(2)), InvalidArgument);

  SUBCASE("line sums within tolerance on the scaling path") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      // Strictly positive, so scaling converges.
      const Matrix m = testing::random_matrix(rng, 6, 1.0).values().array() + 0.05;
      const double tol = 1e-8;
      const auto res = normalize_doubly_stochastic(DemandMatrix(m), tol);
      REQUIRE_FALSE(res.fallback);
      CHECK(((res.matrix.values().rowwise().sum().array() - 1.0).abs() <= tol).all());
      CHECK(((res.matrix.values().colwise().sum().array() - 1.0).abs() <= tol).all());
    }
  }
}

TEST_CASE("add_gaussian_noise") {
  const DemandMatrix d = gen_benchmark({.n = 40, .noise_sigma = 0.0, .seed = 9});
  CHECK(add_gaussian_noise(d, 0.0, 1) == d);
  CHECK(add_gaussian_noise(d, 0.003, 42) == add_gaussian_noise(d, 0.003, 42));
  CHECK_FALSE(add_gaussian_noise(d, 0.003, 42) == add_gaussian_noise(d, 0.003, 43));
  CHECK_THROWS_AS(add_gaussian_noise(d, -1.0, 1), InvalidArgument);

  SUBCASE("support preserved over 50 seeds") {
    const DemandMatrix bench = gen_benchmark({.noise_sigma = 0.0, .seed = 1});
    const SupportMatrix before = support(bench);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const DemandMatrix noisy = add_gaussian_noise(bench, 0.003, seed);
      CHECK(support(noisy) == before);
      CHECK(((noisy.values().array() == 0.0) == (bench.values().array() == 0.0)).all());
    }
  }
  SUBCASE("clamped at zero") {
    const DemandMatrix tiny = mat2(1e-6, 0, 0, 1e-6);
    const DemandMatrix noisy = add_gaussian_noise(tiny, 1.0, 7);
    CHECK((noisy.values().array() >= 0.0).all());
  }
}

TEST_CASE("matrix hash distinguishes seeds") {
  std::vector<std::uint64_t> hashes;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    hashes.push_back(matrix_hash(gen_benchmark({.n = 20, .seed = seed})));
  }
  std::sort(hashes.begin(), hashes.end());
  CHECK(std::adjacent_find(hashes.begin(), hashes.end()) == hashes.end());
}
