#include <gtest/gtest.h>

#include <random>

#include "coentropy/canon.hpp"
#include "coentropy/graph6.hpp"
#include "coentropy/polynomial.hpp"
#include "coentropy/spectral.hpp"
#include "coentropy/spectrum.hpp"
#include "oracles.hpp"

using namespace coentropy;

namespace {

Graph cherry() { return from_edge_list(3, {{1, 2}, {1, 3}}); }

RationalPolynomial rp(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

}  // namespace

TEST(Polynomial, ArithmeticAndText) {
  IntPolynomial a{BigInt(-1), BigInt(1)};  // x - 1
  IntPolynomial b{BigInt(1), BigInt(1)};   // x + 1
  EXPECT_EQ((a * b).to_string(), "-1 0 1");
  EXPECT_EQ((a + b).to_string(), "0 2");
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ((a * b)(BigInt(3)), BigInt(8));
  EXPECT_EQ(IntPolynomial({BigInt(0), BigInt(0), BigInt(1)}).zero_root_multiplicity(), 2);
}

TEST(Polynomial, DivmodAndGcd) {
  auto p = rp({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  auto [q, r] = divmod(p, rp({-1, 1}));
  EXPECT_EQ(q, rp({6, -5, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(p, rp({-2, 1}) * rp({5, 1})), rp({-2, 1}));
}

TEST(Polynomial, SquarefreeDecomposition) {
  auto p = rp({-1, 1}) * rp({-1, 1}) * rp({-1, 1}) * rp({2, 1});  // (x-1)^3 (x+2)
  auto parts = squarefree_decomposition(p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, rp({2, 1}));
  EXPECT_EQ(parts[0].second, 1);
  EXPECT_EQ(parts[1].first, rp({-1, 1}));
  EXPECT_EQ(parts[1].second, 3);
}

TEST(Polynomial, SturmCountsAndIsolation) {
  auto p = rp({-2, 0, 1});  // roots +-sqrt2
  auto chain = sturm_chain(p);
  EXPECT_EQ(count_roots(chain, BigRational(-10), BigRational(10)), 2);
  EXPECT_EQ(count_roots(chain, BigRational(0), BigRational(10)), 1);
  auto ivs = isolate_real_roots(p);
  ASSERT_EQ(ivs.size(), 2u);
  for (auto iv : ivs) {
    bisect_to_width(p, iv, BigRational(1, 1000000));
    EXPECT_LE(iv.hi - iv.lo, BigRational(1, 1000000));
    EXPECT_NEAR(std::abs(iv.lo.convert_to<double>()), std::sqrt(2.0), 1e-6);
  }
}

TEST(Spectral, LaplacianExamples) {
  IntSymMatrix l = laplacian(cherry());
  EXPECT_EQ(l.matrix(), (IntMatrix{{2, -1, -1}, {-1, 1, 0}, {-1, 0, 1}}));
  EXPECT_EQ(laplacian(Graph::from_zero_based(2, {})).matrix(), (IntMatrix{{0, 0}, {0, 0}}));
  EXPECT_EQ(laplacian(from_edge_list(2, {{1, 2}})).matrix(), (IntMatrix{{1, -1}, {-1, 1}}));
  EXPECT_EQ(signless_laplacian(cherry()).matrix(), (IntMatrix{{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
}

TEST(Spectral, IncidenceMatrices) {
  Graph g = cherry();
  IntMatrix mf = oriented_incidence(g, default_orientation(g));
  EXPECT_EQ(mf, (IntMatrix{{1, 1}, {-1, 0}, {0, -1}}));
  EXPECT_EQ(mf * mf.transpose(), laplacian(g).matrix());
  EXPECT_EQ(edge_laplacian_oriented(g, default_orientation(g)).matrix(), (IntMatrix{{2, 1}, {1, 2}}));
  IntMatrix mb = directed_incidence(g);
  EXPECT_EQ(mb.cols(), 4);
  for (int c = 0; c < mb.cols(); ++c) {
    int plus = 0, minus = 0;
    for (int r = 0; r < mb.rows(); ++r) {
      plus += mb(r, c) == 1;
      minus += mb(r, c) == -1;
    }
    EXPECT_EQ(plus, 1);
    EXPECT_EQ(minus, 1);
  }
  // L = (1/2) Mbar Mbar^T
  IntMatrix half = mb * mb.transpose();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(half(i, j), 2 * laplacian(g)(i, j));
  EXPECT_THROW(directed_incidence(Graph::from_zero_based(2, {})), IsolatedVertex);
  EXPECT_THROW(oriented_incidence(g, Orientation{2, 0}), OutOfRange);
}

TEST(Spectral, EdgeLaplacianSharesNonzeroSpectrum) {
  for (const auto& f : enumerate_forms(5, false)) {
    Graph g = to_graph(f);
    if (g.size() == 0 || has_isolated_vertex(g)) continue;
    auto l = nonzero_part(charpoly(laplacian(g)));
    EXPECT_EQ(nonzero_part(charpoly(edge_laplacian_oriented(g, default_orientation(g)))), l);
    EXPECT_EQ(nonzero_part(charpoly(edge_laplacian_arcs(g))), l);
  }
}

TEST(Spectral, CharpolyMatchesDeterminantOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& f : enumerate_forms(n, false)) {
      Graph g = to_graph(f);
      auto expected = oracle::laplacian_charpoly(g);
      CharPoly p = charpoly(laplacian(g));
      ASSERT_EQ(p.degree(), n);
      for (int k = 0; k <= n; ++k) EXPECT_EQ(BigRational(p.coeff(k)), expected[k]) << graph6_encode(g);
    }
}

TEST(Spectral, CharpolyFallsBackToBigIntegers) {
  IntMatrix m(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m(i, j) = (i == j) ? 1000000 : 1;
  CharPoly p = charpoly(m);
  // Eigenvalues 999999 (x11) and 1000011.
  IntPolynomial expected{BigInt(1)};
  for (int i = 0; i < 11; ++i) expected = expected * IntPolynomial{BigInt(-999999), BigInt(1)};
  expected = expected * IntPolynomial{BigInt(-1000011), BigInt(1)};
  EXPECT_EQ(p.polynomial(), expected);
}

TEST(Spectral, JacobiMatchesEigen) {
  std::mt19937_64 rng(7);
  for (const auto& f : enumerate_forms(7, false)) {
    if (rng() % 10) continue;
    Graph g = to_graph(f);
    auto ours = eig_double(laplacian(g));
    auto ref = oracle::eigenvalues(g);
    for (int i = 0; i < g.order(); ++i) EXPECT_NEAR(ours[i], ref[i], 1e-10);
  }
  EXPECT_THROW(eig_double(Matrix<double>{{1, 2}, {3, 4}}), DimensionMismatch);
}

TEST(Spectrum, IntegralSpectrum) {
  Spectrum s = spectrum(charpoly(laplacian(from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}))));
  EXPECT_TRUE(s.is_integral);
  EXPECT_EQ(*s.integers(), (std::vector<long>{0, 2, 2, 4}));
  EXPECT_EQ(s.multiplicity_of(2), 2);
  EXPECT_EQ(to_string(s), "[0, 2, 2, 4]");
}

TEST(Spectrum, IrrationalRootsRefine) {
  Graph p4 = from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
  Spectrum s = spectrum(charpoly(laplacian(p4)));
  EXPECT_FALSE(s.is_integral);
  EXPECT_FALSE(s.integers().has_value());
  // 2 - sqrt2, 2, 2 + sqrt2
  EXPECT_EQ(refine_root(s, 1, 30), "0.585786437626904951198311275790");
  EXPECT_EQ(refine_root(s, 2, 5), "2.00000");
  EXPECT_EQ(refine_root(s, 3, 30), "3.414213562373095048801688724210");
}

TEST(Spectrum, RepeatedIrrationalRoots) {
  // Two disjoint copies of P4: every irrational eigenvalue is doubled.
  Graph g = from_edge_list(8, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}});
  Spectrum s = spectrum(charpoly(laplacian(g)));
  ASSERT_EQ(s.size(), 8);
  EXPECT_EQ(refine_root(s, 2, 20), refine_root(s, 3, 20));
  EXPECT_EQ(refine_root(s, 2, 12), "0.585786437627");
  BigRational sum = 0;
  for (int i = 0; i < 8; ++i) sum += refine_root_rational(s, i, 40);
  EXPECT_LT(abs(sum - 12), BigRational(1, BigInt(10) * 1000000000));
}

TEST(Spectrum, MatchesFloatingEigenvalues) {
  for (const auto& f : enumerate_forms(6, false)) {
    Graph g = to_graph(f);
    Spectrum s = spectrum(charpoly(laplacian(g)));
    auto ref = oracle::eigenvalues(g);
    ASSERT_EQ(s.size(), g.order());
    EXPECT_EQ(s.multiplicity_of(0), components(g).count);
    for (int i = 0; i < s.size(); ++i) EXPECT_NEAR(std::stod(refine_root(s, i, 15)), ref[i], 1e-9);
  }
}

TEST(Spectrum, RankIsOrderMinusComponents) {
  for (const auto& f : enumerate_forms(6, false)) {
    Graph g = to_graph(f);
    EXPECT_EQ(exact_rank(laplacian(g)) + components(g).count, g.order());
  }
}
