#include <gtest/gtest.h>

#include "coentropy/canon.hpp"
#include "coentropy/quantum.hpp"
#include "oracles.hpp"

using namespace coentropy;

namespace {
Graph cherry() { return from_edge_list(3, {{1, 2}, {1, 3}}); }
}  // namespace

TEST(State, IncidenceVectorAmplitudes) {
  ExactPureState psi = incidence_vector(cherry());
  EXPECT_EQ(psi.dim_v, 3);
  EXPECT_EQ(psi.dim_e, 4);
  EXPECT_EQ(psi.norm_squared(), BigRational(4));  // 2m
  // Edge {1,2}: arcs 0 = (1,2), 1 = (2,1).
  EXPECT_EQ(psi.at(0, 0), 1);
  EXPECT_EQ(psi.at(0, 1), -1);
  EXPECT_EQ(psi.at(1, 0), -1);
  EXPECT_EQ(psi.at(1, 1), 1);
  EXPECT_EQ(psi.at(2, 0), 0);
  ExactPureState phi = signless_incidence_vector(cherry());
  for (int k : phi.numerators) EXPECT_TRUE(k == 0 || k == 1);
}

TEST(State, RejectsGraphsWithoutEdgesOrWithIsolatedVertices) {
  EXPECT_THROW(incidence_vector(Graph::from_zero_based(3, {})), EmptyGraph);
  EXPECT_THROW(incidence_vector(from_edge_list(3, {{1, 2}})), IsolatedVertex);
}

TEST(State, ExactPartialTracesOfSmallExamples) {
  Graph g = cherry();
  ExactPureState psi = incidence_vector(g);
  EXPECT_TRUE(partial_trace_E(psi) == laplacian(g));
  EXPECT_TRUE(partial_trace_V(psi) == edge_laplacian_arcs(g));
  EXPECT_TRUE(partial_trace_E(signless_incidence_vector(g)) == signless_laplacian(g));
}

TEST(State, FloatingTracesAgreeWithDirectOracle) {
  for (const auto& f : enumerate_forms(5, false)) {
    Graph g = to_graph(f);
    if (g.size() == 0 || has_isolated_vertex(g)) continue;
    PureState s = to_floating(incidence_vector(g));
    auto tv = oracle::trace_out(s.amplitudes, s.dim_v, s.dim_e, true);
    auto te = oracle::trace_out(s.amplitudes, s.dim_v, s.dim_e, false);
    auto dv = partial_trace_E(s);
    auto de = partial_trace_V(s);
    for (int i = 0; i < s.dim_v; ++i)
      for (int j = 0; j < s.dim_v; ++j) EXPECT_NEAR(dv(i, j), tv[i][j], 1e-12);
    for (int i = 0; i < s.dim_e; ++i)
      for (int j = 0; j < s.dim_e; ++j) EXPECT_NEAR(de(i, j), te[i][j], 1e-12);
  }
}

TEST(State, UnitNormalization) {
  PureState s = to_floating(incidence_vector(cherry()), NormConvention::unit);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(Schmidt, RankAndCoefficients) {
  Graph g = from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});  // spectrum 0,2,2,4
  EXPECT_EQ(schmidt_rank(g), 3);
  SchmidtData sd = schmidt(to_floating(incidence_vector(g)));
  ASSERT_EQ(sd.rank, 3);
  EXPECT_NEAR(sd.coefficients[0] * sd.coefficients[0], 4.0, 1e-12);
  EXPECT_NEAR(sd.coefficients[1] * sd.coefficients[1], 2.0, 1e-12);
  EXPECT_NEAR(sd.coefficients[2] * sd.coefficients[2], 2.0, 1e-12);
  Graph two = from_edge_list(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(schmidt_rank(two), 2);
  EXPECT_THROW(schmidt(to_floating(incidence_vector(g)), 0.0), std::invalid_argument);
}

TEST(Schmidt, LuEquivalence) {
  Graph g = from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
  Graph h = from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_TRUE(lu_equivalent(g, permute(g, std::vector<int>{3, 1, 0, 2})));
  EXPECT_FALSE(lu_equivalent(g, h));
  EXPECT_THROW(lu_equivalent(g, cherry()), DimensionMismatch);
  EXPECT_THROW(lu_equivalent(g, from_edge_list(4, {{1, 2}, {3, 4}})), DimensionMismatch);
}

TEST(Mixture, WorkedThreeVertexExample) {
  Graph g = cherry();
  ExactDensityMatrix rho = mixture_density(uniform_edge_ensemble<BigRational>(g, -1), 3);
  const BigRational h(1, 2), q(1, 4);
  Matrix<BigRational> expected{{h, -q, -q}, {-q, q, 0}, {-q, 0, q}};
  EXPECT_EQ(rho.entries, expected);
  EXPECT_EQ(rho.trace_value, BigRational(1));
  EXPECT_EQ(rho.entries, normalized_laplacian_density(g).entries);
}

TEST(Mixture, SignlessEnsembleGivesSignlessLaplacian) {
  Graph g = from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
  ExactDensityMatrix rho = mixture_density(uniform_edge_ensemble<BigRational>(g, +1), 4);
  IntSymMatrix q = signless_laplacian(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(rho(i, j), BigRational(q(i, j), 2 * g.size()));
}

TEST(Mixture, DoubleEnsembleAndWeightErrors) {
  Graph g = cherry();
  DensityMatrix<double> rho = mixture_density(uniform_edge_ensemble<double>(g, -1), 3);
  EXPECT_NEAR(rho(0, 1), -0.25, 1e-15);
  EdgeStateEnsemble<BigRational> bad;
  bad.members.emplace_back(BigRational(1, 2), EdgeState<BigRational>::uniform(0, 1, -1));
  EXPECT_THROW(mixture_density(bad, 3), WeightError);
  bad.members.emplace_back(BigRational(1, 2), EdgeState<BigRational>{0, 2, BigRational(1, 3), BigRational(1, 3), -1});
  EXPECT_THROW(mixture_density(bad, 3), WeightError);
  EdgeStateEnsemble<BigRational> negative;
  negative.members.emplace_back(BigRational(-1), EdgeState<BigRational>::uniform(0, 1, -1));
  negative.members.emplace_back(BigRational(2), EdgeState<BigRational>::uniform(0, 2, -1));
  EXPECT_THROW(mixture_density(negative, 3), WeightError);
}

TEST(Dump, AmplitudeLines) {
  Graph g = from_edge_list(2, {{1, 2}});
  auto lines = dump_amplitudes(incidence_vector(g), g);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "a_1 ⊗ d_(1,2): +1/√2");
  EXPECT_EQ(lines[1], "a_1 ⊗ d_(2,1): -1/√2");
  EXPECT_EQ(arc_endpoints(g, 1), (std::pair{2, 1}));
}
