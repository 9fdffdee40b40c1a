#include "gpa/propagate.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "gpa/generators.hpp"
#include "test_graphs.hpp"

namespace gpa {
namespace {

class PropagateTest : public ::testing::Test {
 protected:
  void SetUp() override { set_warnings_enabled(false); }
};

TEST_F(PropagateTest, HandTracedPath) {
  const Graph g = testing::path_graph(2);
  EmbeddingMatrix start(2, 1);
  start(0, 0) = 0.0f;
  start(1, 0) = 2.0f;
  PropagationConfig cfg;
  cfg.delta = 1e-12;
  cfg.max_iters = 2;
  const auto r = propagate_from(g, start, cfg);
  ASSERT_EQ(r.iterations(), 2u);
  EXPECT_DOUBLE_EQ(r.delta_trace[0], 1.0);
  EXPECT_DOUBLE_EQ(r.delta_trace[1], 0.0);
  EXPECT_FLOAT_EQ(r.embedding(0, 0), 1.0f);
  EXPECT_FLOAT_EQ(r.embedding(1, 0), 1.0f);
  EXPECT_TRUE(r.converged);
}

TEST_F(PropagateTest, OneIterationOfPathIsExact) {
  const Graph g = testing::path_graph(2);
  EmbeddingMatrix start(2, 1);
  start(1, 0) = 2.0f;
  PropagationConfig cfg;
  cfg.delta = 0.5;
  cfg.max_iters = 1;
  const auto r = propagate_from(g, start, cfg);
  EXPECT_EQ(r.iterations(), 1u);
  EXPECT_FALSE(r.converged);
  EXPECT_FLOAT_EQ(r.embedding(0, 0), 1.0f);
}

TEST_F(PropagateTest, ConstantRowsAreFixedPoint) {
  const Graph g = erdos_renyi(100, 0.05, 1);
  EmbeddingMatrix start(100, 6);
  for (std::size_t v = 0; v < 100; ++v) {
    for (std::size_t j = 0; j < 6; ++j) start(v, j) = 0.25f * static_cast<float>(j);
  }
  const auto r = propagate_from(g, start, {});
  ASSERT_EQ(r.iterations(), 1u);
  EXPECT_EQ(r.delta_trace[0], 0.0);
  EXPECT_EQ(r.embedding, start);
}

TEST_F(PropagateTest, IsolatedNodeKeepsItsRow) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}};
  const Graph g = Graph::from_edges(4, edges);
  EmbeddingMatrix start = random_embedding(4, 5, 2);
  PropagationConfig cfg;
  cfg.delta = 1e-9;
  const auto r = propagate_from(g, start, cfg);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(r.embedding(3, j), start(3, j));
}

TEST_F(PropagateTest, IsolatedNodesCountInDenominator) {
  // Path of two plus two isolated nodes: movement 2 spread over 4 nodes.
  const std::vector<Edge> edges = {{0, 1}};
  const Graph g = Graph::from_edges(4, edges);
  EmbeddingMatrix start(4, 1);
  start(1, 0) = 2.0f;
  PropagationConfig cfg;
  cfg.delta = 1e-12;
  cfg.max_iters = 1;
  EXPECT_DOUBLE_EQ(propagate_from(g, start, cfg).delta_trace[0], 0.5);
}

TEST_F(PropagateTest, SynchronousUpdate) {
  // On a 3-path, node 2's update must use node 1's previous value.
  const Graph g = testing::path_graph(3);
  EmbeddingMatrix start(3, 1);
  start(0, 0) = 4.0f;
  PropagationConfig cfg;
  cfg.max_iters = 1;
  cfg.delta = 1e-12;
  const auto r = propagate_from(g, start, cfg);
  EXPECT_FLOAT_EQ(r.embedding(0, 0), 2.0f);   // (4 + 0) / 2
  EXPECT_FLOAT_EQ(r.embedding(1, 0), 1.0f);   // (0 + (4 + 0) / 2) / 2
  EXPECT_FLOAT_EQ(r.embedding(2, 0), 0.0f);   // (0 + 0) / 2
}

TEST_F(PropagateTest, ValuesStayWithinInitialRange) {
  const Graph g = erdos_renyi(300, 0.02, 3);
  const EmbeddingMatrix start = random_embedding(300, 8, 4);
  const auto [lo, hi] = std::minmax_element(start.data().begin(), start.data().end());
  const float min0 = *lo, max0 = *hi;
  PropagationConfig cfg;
  cfg.max_iters = 30;
  const auto r = propagate_from(g, start, cfg);
  for (float x : r.embedding.data()) {
    EXPECT_GE(x, min0);
    EXPECT_LE(x, max0);
  }
}

TEST_F(PropagateTest, NeighborVisitsEqualDegreeSum) {
  const Graph g = erdos_renyi(500, 0.01, 5);
  PropagationConfig cfg;
  cfg.max_iters = 5;
  cfg.delta = 1e-12;
  const auto r = propagate_from(g, random_embedding(500, 4, 1), cfg);
  ASSERT_EQ(r.neighbor_visits.size(), 5u);
  for (auto visits : r.neighbor_visits) EXPECT_EQ(visits, 2 * g.edge_count());
}

TEST_F(PropagateTest, ResultIndependentOfThreadCount) {
  const Graph g = erdos_renyi(800, 0.01, 6);
  const EmbeddingMatrix start = random_embedding(800, 16, 2);
  PropagationConfig one;
  PropagationConfig four = one;
  four.threads = 4;
  const auto a = propagate_from(g, start, one);
  const auto b = propagate_from(g, start, four);
  EXPECT_EQ(a.embedding, b.embedding);
  EXPECT_EQ(a.delta_trace, b.delta_trace);
}

TEST_F(PropagateTest, ConvergesOnConnectedGraph) {
  const Graph g = connect_components(erdos_renyi(2000, 0.004, 7), 7);
  const auto r = propagate_from(g, random_embedding(2000, 32, 3), {});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.delta_trace.back(), 1.0 / 2000);
  EXPECT_LE(r.iterations(), 100u);
}

TEST_F(PropagateTest, RejectsShapeMismatch) {
  const Graph g = testing::path_graph(3);
  EXPECT_THROW(propagate_from(g, EmbeddingMatrix(2, 4), {}), DomainError);
  AbstractGraph ga = build_abstract(g, random_balanced_partition(3, 2, 1));
  EXPECT_THROW(propagate(g, ga, EmbeddingMatrix(3, 4), {}), DomainError);
  PropagationConfig bad;
  bad.delta = -1.0;
  EXPECT_THROW(propagate_from(g, EmbeddingMatrix(3, 4), bad), DomainError);
}

TEST_F(PropagateTest, InheritCopiesAbstractRows) {
  const Graph g = testing::four_block_graph();
  const AbstractGraph ga = build_abstract(g, testing::four_block_partition());
  const EmbeddingMatrix fa = random_embedding(4, 3, 9);
  const EmbeddingMatrix inherited = inherit_embedding(ga, fa);
  for (NodeId v = 0; v < 12; ++v) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(inherited(v, j), fa(v / 3, j));
  }
}

TEST_F(PropagateTest, SingleNodeGraphInitializes) {
  const Graph g = Graph::from_edges(1, std::vector<Edge>{});
  GpaConfig cfg;
  cfg.abstract_skipgram.dim = 8;
  const EmbeddingMatrix m = init_for_graph(g, cfg, 1);
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.dim(), 8u);
  EXPECT_TRUE(m.all_finite());
}

TEST_F(PropagateTest, BlocksStartIdenticalAndSplitAfterPropagation) {
  const Graph g = testing::four_block_graph();
  GpaConfig cfg;
  cfg.k = 4;
  cfg.abstract_skipgram.dim = 8;
  cfg.abstract_walks = {10, 10};
  const GpaInitResult r = run_gpa_init(g, cfg, 3);
  const auto& assign = r.partitioning.assignment;
  bool any_split = false;
  for (NodeId a = 0; a < 12; ++a) {
    for (NodeId b = a + 1; b < 12; ++b) {
      if (assign[a] != assign[b]) continue;
      for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(r.inherited(a, j), r.inherited(b, j));
      // Same block, different neighborhoods: propagation pulls them apart.
      bool same_nbrs = std::ranges::equal(g.neighbors(a), g.neighbors(b), {},
                                          [](const Neighbor& x) { return x.node; },
                                          [](const Neighbor& x) { return x.node; });
      if (!same_nbrs && euclidean_distance(r.embedding().row(a), r.embedding().row(b)) > 0) {
        any_split = true;
      }
    }
  }
  EXPECT_TRUE(any_split);
  EXPECT_GE(r.propagation.iterations(), 1u);
}

TEST_F(PropagateTest, CliquesGetCommunityInitialization) {
  const Graph g = testing::two_cliques(50);
  GpaConfig cfg;
  cfg.abstract_skipgram.dim = 16;
  const EmbeddingMatrix m = init_for_graph(g, cfg, 5);
  double intra = 0.0, inter = 0.0;
  int ni = 0, nx = 0;
  for (NodeId a = 0; a < 100; ++a) {
    for (NodeId b = a + 1; b < 100; ++b) {
      const double c = cosine_similarity(m.row(a), m.row(b));
      if ((a < 50) == (b < 50)) {
        intra += c;
        ++ni;
      } else {
        inter += c;
        ++nx;
      }
    }
  }
  EXPECT_GT(intra / ni, inter / nx);
}

TEST_F(PropagateTest, PipelineTimingsAndDeterminism) {
  const Graph g = planted_partition(400, 4, 0.08, 0.005, 2).graph;
  GpaConfig cfg;
  cfg.abstract_skipgram.dim = 16;
  const GpaInitResult a = run_gpa_init(g, cfg, 11);
  const GpaInitResult b = run_gpa_init(g, cfg, 11);
  EXPECT_EQ(a.embedding(), b.embedding());
  EXPECT_EQ(a.partitioning.k, default_k(g));
  EXPECT_GE(a.partition_seconds, 0.0);
  EXPECT_GE(a.total_seconds(), a.embed_seconds);
}

TEST_F(PropagateTest, ChooseWalksOverridesDefaults) {
  const Graph g = testing::two_cliques(10);
  GpaConfig cfg;
  cfg.abstract_skipgram.dim = 8;
  std::size_t calls = 0;
  cfg.choose_walks = [&](const AbstractGraph& ga) {
    ++calls;
    EXPECT_EQ(ga.k(), default_k(g));
    return WalkParams{3, 7};
  };
  const GpaInitResult r = run_gpa_init(g, cfg, 1);
  EXPECT_EQ(calls, 1u);
  EXPECT_EQ(r.abstract_walks.walks_per_node, 3u);
  EXPECT_EQ(r.abstract_walks.walk_length, 7u);
}

TEST_F(PropagateTest, WritesDeltaTrace) {
  PropagationResult r;
  r.delta_trace = {1.0, 0.5};
  std::ostringstream out;
  write_delta_trace(out, r);
  EXPECT_EQ(out.str(), "iteration,delta\n1,1\n2,0.5\n");
}

}  // namespace
}  // namespace gpa
