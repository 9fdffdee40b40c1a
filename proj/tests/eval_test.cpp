#include "gpa/eval.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gpa/generators.hpp"
#include "test_graphs.hpp"

namespace gpa {
namespace {

class EvalTest : public ::testing::Test {
 protected:
  void SetUp() override { set_warnings_enabled(false); }
};

NodePair ordered(NodePair p) { return p.first < p.second ? p : NodePair{p.second, p.first}; }

TEST_F(EvalTest, F1HandExample) {
  const std::vector<std::vector<std::uint32_t>> truth = {{0}, {1}, {1}, {0}};
  const std::vector<std::vector<std::uint32_t>> pred = {{0}, {1}, {0}, {1}};
  const F1Scores f = f1_scores(pred, truth, 3);  // label 2 never appears
  EXPECT_DOUBLE_EQ(f.micro, 0.5);
  EXPECT_DOUBLE_EQ(f.macro, 1.0 / 3.0);
}

TEST_F(EvalTest, F1Properties) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::uint32_t>> truth(30), pred(30);
    for (std::size_t i = 0; i < 30; ++i) {
      truth[i] = {static_cast<std::uint32_t>(uniform_index(rng, 4))};
      pred[i] = {static_cast<std::uint32_t>(uniform_index(rng, 4))};
    }
    const F1Scores f = f1_scores(pred, truth, 4);
    EXPECT_GE(f.micro, 0.0);
    EXPECT_LE(f.micro, 1.0);
    EXPECT_GE(f.macro, 0.0);
    EXPECT_LE(f.macro, 1.0);
    EXPECT_DOUBLE_EQ(f1_scores(truth, truth, 4).micro, 1.0);
  }
  const std::vector<std::vector<std::uint32_t>> one = {{0}, {0}, {0}};
  const std::vector<std::vector<std::uint32_t>> none = {{}, {0}, {}};
  const F1Scores f = f1_scores(none, one, 1);
  EXPECT_DOUBLE_EQ(f.micro, f.macro);
  EXPECT_THROW(f1_scores(one, {{0}}, 1), DomainError);
  EXPECT_THROW(f1_scores({{3}}, {{0}}, 1), DomainError);
}

TEST_F(EvalTest, LinkSplitInvariants) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = erdos_renyi(400, 0.03, seed);
    const LinkPredSplit s = make_link_split(g, 0.1, seed);
    EXPECT_EQ(s.held_out, static_cast<std::size_t>(std::ceil(0.1 * g.edge_count())));
    EXPECT_EQ(s.train_graph.node_count(), s.component.size());
    EXPECT_EQ(s.negatives.size(), s.positives.size());
    EXPECT_EQ(largest_connected_component(s.train_graph).size(), s.component.size());

    std::vector<std::size_t> pos_count(s.component.size(), 0), neg_count(s.component.size(), 0);
    std::set<NodePair> seen;
    for (const NodePair& p : s.positives) {
      EXPECT_TRUE(g.has_edge(s.component[p.first], s.component[p.second]));
      EXPECT_FALSE(s.train_graph.has_edge(p.first, p.second));
      EXPECT_TRUE(seen.insert(ordered(p)).second);
      ++pos_count[p.first];
      ++pos_count[p.second];
    }
    for (const NodePair& p : s.negatives) {
      EXPECT_NE(p.first, p.second);
      EXPECT_FALSE(g.has_edge(s.component[p.first], s.component[p.second]));
      EXPECT_TRUE(seen.insert(ordered(p)).second);
      ++neg_count[p.first];
      ++neg_count[p.second];
    }
    EXPECT_EQ(pos_count, neg_count) << "seed " << seed;
    EXPECT_EQ(pos_count, s.per_node_positive);
  }
}

TEST_F(EvalTest, LinkSplitDeterministic) {
  const Graph g = erdos_renyi(300, 0.03, 2);
  const LinkPredSplit a = make_link_split(g, 0.1, 9);
  const LinkPredSplit b = make_link_split(g, 0.1, 9);
  EXPECT_EQ(a.positives, b.positives);
  EXPECT_EQ(a.negatives, b.negatives);
}

TEST_F(EvalTest, LinkSplitRejections) {
  const Graph g = erdos_renyi(100, 0.1, 1);
  EXPECT_THROW(make_link_split(g, 0.0, 1), DomainError);
  EXPECT_THROW(make_link_split(g, 1.0, 1), DomainError);
  EXPECT_THROW(make_link_split(testing::path_graph(2), 0.5, 1), DomainError);
  // K5 has no non-edges at all, so no negative can ever be drawn.
  const Graph k5 = Graph::from_edges(5, testing::clique_edges(0, 5));
  EXPECT_THROW(make_link_split(k5, 0.2, 1), DomainError);
}

EmbeddingMatrix oracle_embedding(const LinkPredSplit& s) {
  // One axis per positive edge, rows normalized: positive pairs share an axis
  // (cosine > 0, distance < sqrt 2), negative pairs never do (cosine 0,
  // distance sqrt 2).
  EmbeddingMatrix e(s.component.size(), s.positives.size());
  for (std::size_t k = 0; k < s.positives.size(); ++k) {
    e(s.positives[k].first, k) = 1.0f;
    e(s.positives[k].second, k) = 1.0f;
  }
  for (std::size_t v = 0; v < e.rows(); ++v) {
    const double n = norm(e.row(v));
    if (n > 0.0) {
      for (float& x : e.row(v)) x = static_cast<float>(x / n);
    }
  }
  return e;
}

TEST_F(EvalTest, PerfectEmbeddingScoresOne) {
  const Graph g = erdos_renyi(300, 0.02, 4);
  const LinkPredSplit s = make_link_split(g, 0.05, 4);
  const EmbeddingMatrix e = oracle_embedding(s);
  for (Similarity m : {Similarity::kCosine, Similarity::kEuclidean}) {
    const LinkPrecision p = link_precision(e, s, m);
    EXPECT_DOUBLE_EQ(p.global, 1.0);
    EXPECT_DOUBLE_EQ(p.per_node, 1.0);
  }
}

TEST_F(EvalTest, ConstantEmbeddingIsNotRewarded) {
  const Graph g = erdos_renyi(300, 0.03, 4);
  const LinkPredSplit s = make_link_split(g, 0.1, 4);
  const EmbeddingMatrix e(s.component.size(), 8, 1.0f);
  EXPECT_DOUBLE_EQ(link_precision(e, s, Similarity::kCosine).global, 0.0);
  EXPECT_DOUBLE_EQ(link_precision(e, s, Similarity::kEuclidean).global, 0.0);
}

TEST_F(EvalTest, RandomEmbeddingNearHalf) {
  double cos = 0.0, euc = 0.0;
  const Graph g = erdos_renyi(1000, 0.01, 7);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const LinkPredSplit s = make_link_split(g, 0.1, seed);
    const EmbeddingMatrix e = random_embedding(s.component.size(), 16, seed + 100);
    cos += link_precision(e, s, Similarity::kCosine).global;
    euc += link_precision(e, s, Similarity::kEuclidean).global;
  }
  EXPECT_NEAR(cos / 20.0, 0.5, 0.05);
  EXPECT_NEAR(euc / 20.0, 0.5, 0.05);
}

TEST_F(EvalTest, PrecisionInvariances) {
  const Graph g = erdos_renyi(400, 0.02, 8);
  const LinkPredSplit s = make_link_split(g, 0.1, 8);
  const EmbeddingMatrix e = random_embedding(s.component.size(), 2, 5);
  // Rotating by 90 degrees maps float values exactly, so ranks are unchanged.
  EmbeddingMatrix rotated(e.rows(), 2);
  EmbeddingMatrix scaled(e.rows(), 2);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    rotated(i, 0) = -e(i, 1);
    rotated(i, 1) = e(i, 0);
    scaled(i, 0) = 4.0f * e(i, 0);
    scaled(i, 1) = 4.0f * e(i, 1);
  }
  for (Similarity m : {Similarity::kCosine, Similarity::kEuclidean}) {
    const LinkPrecision base = link_precision(e, s, m);
    EXPECT_DOUBLE_EQ(link_precision(rotated, s, m).global, base.global);
    EXPECT_DOUBLE_EQ(link_precision(scaled, s, m).global, base.global);
    EXPECT_DOUBLE_EQ(link_precision(scaled, s, m).per_node, base.per_node);
  }
  EXPECT_THROW(link_precision(EmbeddingMatrix(3, 2), s, Similarity::kCosine), DomainError);
}

TEST_F(EvalTest, LogRegGradientMatchesFiniteDifferences) {
  Rng rng(2);
  const std::size_t dim = 6, n = 40;
  std::vector<double> x(n * dim), y(n), w(dim);
  std::normal_distribution<double> normal;
  for (double& v : x) v = normal(rng);
  for (double& v : y) v = uniform01(rng) < 0.5 ? 0.0 : 1.0;
  for (double& v : w) v = normal(rng);
  const double bias = 0.3, l2 = 1.5;
  std::vector<double> gw(dim);
  double gb = 0.0;
  logreg_gradient(w, bias, x, y, dim, l2, gw, gb);
  const double h = 1e-6;
  for (std::size_t j = 0; j < dim; ++j) {
    auto wp = w, wm = w;
    wp[j] += h;
    wm[j] -= h;
    const double fd = (logreg_objective(wp, bias, x, y, dim, l2) -
                       logreg_objective(wm, bias, x, y, dim, l2)) / (2 * h);
    EXPECT_NEAR(gw[j], fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
  const double fd_b = (logreg_objective(w, bias + h, x, y, dim, l2) -
                       logreg_objective(w, bias - h, x, y, dim, l2)) / (2 * h);
  EXPECT_NEAR(gb, fd_b, 1e-6);
}

LabelSet two_class_labels(std::size_t n) {
  LabelSet labels;
  labels.label_count = 2;
  labels.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) labels.labels[i] = {static_cast<std::uint32_t>(i % 2)};
  return labels;
}

TEST_F(EvalTest, SeparableDataClassifiedPerfectly) {
  const std::size_t n = 200;
  const LabelSet labels = two_class_labels(n);
  EmbeddingMatrix e = random_embedding(n, 4, 1);
  for (std::size_t i = 0; i < n; ++i) e(i, 0) = (i % 2 == 0) ? -1.0f : 1.0f;
  const ClassificationSplit split = make_classification_split(labels, 3);
  EXPECT_EQ(split.train.size(), 100u);
  EXPECT_EQ(split.test.size(), 100u);
  const auto clf = OneVsRestClassifier::fit(e, labels, split.train, {});
  const auto pred = clf.predict(e, labels, split.test);
  std::vector<std::vector<std::uint32_t>> truth;
  for (NodeId v : split.test) truth.push_back(labels.labels[v]);
  const F1Scores f = f1_scores(pred, truth, 2);
  EXPECT_DOUBLE_EQ(f.micro, 1.0);
  EXPECT_DOUBLE_EQ(f.macro, 1.0);
}

TEST_F(EvalTest, SingleLabelAlwaysPredicted) {
  LabelSet labels;
  labels.label_count = 1;
  labels.labels.assign(20, {0});
  const EmbeddingMatrix e = random_embedding(20, 4, 2);
  const ClassificationSplit split = make_classification_split(labels, 1);
  const auto clf = OneVsRestClassifier::fit(e, labels, split.train, {});
  std::vector<std::vector<std::uint32_t>> truth(split.test.size(), {0});
  EXPECT_DOUBLE_EQ(f1_scores(clf.predict(e, labels, split.test), truth, 1).micro, 1.0);
}

TEST_F(EvalTest, UntrainedLabelNeverPredicted) {
  LabelSet labels = two_class_labels(40);
  labels.label_count = 3;
  const EmbeddingMatrix e = random_embedding(40, 4, 2);
  std::vector<NodeId> train(40);
  std::iota(train.begin(), train.end(), 0u);
  const auto clf = OneVsRestClassifier::fit(e, labels, train, {});
  EXPECT_EQ(clf.label_count(), 3u);
  for (NodeId v = 0; v < 40; ++v) {
    EXPECT_EQ(clf.probability(2, e.row(v)), 0.0);
    const auto top = clf.top_labels(e.row(v), 2);
    EXPECT_EQ(std::count(top.begin(), top.end(), 2u), 0);
  }
}

TEST_F(EvalTest, ClassificationSplitOddCount) {
  const LabelSet labels = two_class_labels(7);
  const ClassificationSplit s = make_classification_split(labels, 4);
  EXPECT_EQ(s.train.size(), 4u);
  EXPECT_EQ(s.test.size(), 3u);
  std::vector<NodeId> all = s.train;
  all.insert(all.end(), s.test.begin(), s.test.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6}));
}

ComparisonConfig small_config(InitMode init, Task task) {
  ComparisonConfig cfg;
  cfg.init = init;
  cfg.task = task;
  cfg.seeds = {1};
  cfg.walks = {4, 10};
  cfg.skipgram.dim = 16;
  cfg.skipgram.window = 3;
  cfg.gpa.abstract_walks = {10, 10};
  return cfg;
}

TEST_F(EvalTest, ComparisonSingleSeed) {
  const Graph g = erdos_renyi(200, 0.04, 1);
  const ComparisonReport r = run_comparison(g, nullptr, small_config(InitMode::kGpa, Task::kLink));
  ASSERT_EQ(r.runs.size(), 1u);
  const RunRecord& run = r.runs[0];
  EXPECT_EQ(run.seed, 1u);
  EXPECT_GE(run.init_seconds, 0.0);
  EXPECT_GE(run.total_seconds, run.init_seconds);
  EXPECT_GE(run.cosine_precision, 0.0);
  EXPECT_LE(run.cosine_precision, 1.0);
  EXPECT_EQ(r.stddev().cosine_precision, 0.0);
}

TEST_F(EvalTest, ComparisonIsReproducible) {
  const Graph g = erdos_renyi(200, 0.04, 2);
  auto cfg = small_config(InitMode::kGpa, Task::kLink);
  cfg.seeds = {1, 2, 3};
  const auto a = run_comparison(g, nullptr, cfg);
  cfg.parallel_runs = 3;
  const auto b = run_comparison(g, nullptr, cfg);
  ASSERT_EQ(a.runs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.runs[i].seed, b.runs[i].seed);
    EXPECT_EQ(a.runs[i].cosine_precision, b.runs[i].cosine_precision);
    EXPECT_EQ(a.runs[i].euclidean_per_node, b.runs[i].euclidean_per_node);
  }
}

TEST_F(EvalTest, ClassificationComparisonOnCliques) {
  const Graph g = testing::two_cliques(30);
  LabelSet labels;
  labels.label_count = 2;
  labels.labels.resize(60);
  for (NodeId v = 0; v < 60; ++v) labels.labels[v] = {v < 30 ? 0u : 1u};
  auto cfg = small_config(InitMode::kGpa, Task::kClassify);
  cfg.seeds = {1, 2, 3};
  const auto gpa = run_comparison(g, &labels, cfg).mean();
  cfg.init = InitMode::kRandom;
  const auto rnd = run_comparison(g, &labels, cfg).mean();
  EXPECT_GE(gpa.micro_f1, 0.9);
  EXPECT_GE(gpa.micro_f1 + 1e-9, rnd.micro_f1);
  EXPECT_THROW(run_comparison(g, nullptr, cfg), DomainError);
}

TEST_F(EvalTest, ReportCsvShape) {
  ComparisonReport report;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    RunRecord r;
    r.seed = s;
    r.cosine_precision = 0.1 * static_cast<double>(s);
    report.runs.push_back(r);
  }
  EXPECT_DOUBLE_EQ(report.mean().cosine_precision, 0.25);
  EXPECT_NEAR(report.stddev().cosine_precision, std::sqrt(0.05 / 3.0), 1e-12);
  auto cfg = small_config(InitMode::kRandom, Task::kLink);
  std::ostringstream out;
  write_report_csv(out, report, cfg);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  ASSERT_EQ(rows.size(), 1u + 4u + 2u);
  EXPECT_NE(rows[0].find("cosine_precision"), std::string::npos);
  EXPECT_EQ(rows[5].rfind("mean", 0), 0u);
  EXPECT_EQ(rows[6].rfind("std", 0), 0u);
}

}  // namespace
}  // namespace gpa
