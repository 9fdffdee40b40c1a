// gpa: command-line front end for partitioning, GPA initialization,
// embedding, hyperparameter learning and evaluation.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpa/abstract_graph.hpp"
#include "gpa/embedding.hpp"
#include "gpa/eval.hpp"
#include "gpa/generators.hpp"
#include "gpa/graph.hpp"
#include "gpa/hyperopt.hpp"
#include "gpa/partition.hpp"
#include "gpa/propagate.hpp"
#include "gpa/skipgram.hpp"
#include "gpa/walk.hpp"

namespace {

using namespace gpa;

struct Options {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  bool quiet = false;

  std::string input;
  std::string output;
  std::string labels;
  std::string init_path;
  std::string model_path;
  std::string dataset_out;
  std::string mapping_out;
  std::string trace_out;
  std::string labels_out;
  bool weighted = false;

  std::size_t k = 0;
  double epsilon = 0.05;
  double delta = 0.0;
  std::size_t max_iters = 100;

  WalkParams walks{10, 40};
  WalkParams abstract_walks{40, 40};
  SkipGramParams sp;

  // hyperlearn
  std::size_t graph_count = 20;
  std::vector<std::size_t> grid_walks{5, 10, 20, 40, 80};
  std::vector<std::size_t> grid_lengths{10, 20, 40, 80};
  std::size_t min_nodes = 50;
  std::size_t max_nodes = 2000;
  std::size_t fit_epochs = 400;
  double fit_lr = FitOptions{}.lr;
  bool maximize = false;

  // evaluation
  std::string init_mode = "gpa";
  std::size_t seed_count = 10;
  double alpha = 0.1;
  bool table = false;
  double l2 = 1.0;
  std::size_t logreg_epochs = 100;

  // generate
  std::size_t nodes = 1000;
  std::size_t blocks = 10;
  double p_in = 0.05;
  double p_out = 0.001;
};

void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Seed for all randomness (falls back to GPA_SEED)")
      ->envname("GPA_SEED");
  cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--quiet", o.quiet, "Suppress warnings");
}

void add_input(CLI::App* cmd, Options& o, bool weighted_flag = true) {
  cmd->add_option("--input", o.input, "Edge list (u v [w] per line)")->required();
  if (weighted_flag) cmd->add_flag("--weighted", o.weighted, "Read the third column as edge weight");
}

void add_partition_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "Number of blocks (default ceil(sqrt(n)))")->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", o.epsilon, "Balance slack")->check(CLI::Range(1e-9, 1.0 - 1e-9));
}

void add_skipgram_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim", o.sp.dim, "Embedding dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--window", o.sp.window, "Skip-gram window")->check(CLI::PositiveNumber);
  cmd->add_option("--negatives", o.sp.negatives, "Negative samples per pair")->check(CLI::PositiveNumber);
  cmd->add_option("--epochs", o.sp.epochs, "Passes over the walk corpus")->check(CLI::PositiveNumber);
  cmd->add_option("--lr", o.sp.initial_lr, "Initial learning rate")->check(CLI::PositiveNumber);
}

void add_walk_flags(CLI::App* cmd, WalkParams& wp, const std::string& prefix) {
  cmd->add_option("--" + prefix + "walks", wp.walks_per_node, "Walks per node")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--" + prefix + "length", wp.walk_length, "Walk length")->check(CLI::PositiveNumber);
}

void add_gpa_flags(CLI::App* cmd, Options& o) {
  add_partition_flags(cmd, o);
  add_walk_flags(cmd, o.abstract_walks, "abstract-");
  cmd->add_option("--delta", o.delta, "Propagation threshold (default 1/|V|)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-iters", o.max_iters, "Propagation iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--model", o.model_path, "Hyperparameter model choosing the abstract walks");
}

GpaConfig gpa_config(const Options& o) {
  GpaConfig cfg;
  cfg.k = o.k;
  cfg.partition.epsilon = o.epsilon;
  cfg.abstract_walks = o.abstract_walks;
  cfg.abstract_skipgram = o.sp;
  cfg.abstract_skipgram.threads = 1;
  cfg.propagation.delta = o.delta;
  cfg.propagation.max_iters = o.max_iters;
  cfg.propagation.threads = o.threads;
  if (!o.model_path.empty()) {
    const RegressionModel model = load_model(o.model_path);
    const HyperGrid grid = make_grid(o.grid_walks, o.grid_lengths);
    const bool maximize = o.maximize;
    cfg.choose_walks = [model, grid, maximize](const AbstractGraph& ga) {
      const auto dir = maximize ? SelectDirection::kMaximize : SelectDirection::kMinimize;
      return select_hyperparameters(model, ga.core, grid, dir).combo.walk_params();
    };
  }
  return cfg;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

Partitioning partition_graph(const Graph& g, const Options& o) {
  PartitionOptions po;
  po.epsilon = o.epsilon;
  po.seed = o.seed;
  return partition(g, o.k == 0 ? default_k(g) : o.k, po);
}

void cmd_generate(const Options& o) {
  const PlantedGraph pg = planted_partition(o.nodes, o.blocks, o.p_in, o.p_out, o.seed);
  save_edge_list(o.output, pg.graph, false);
  if (!o.labels_out.empty()) {
    auto out = open_output(o.labels_out);
    for (std::size_t v = 0; v < pg.block.size(); ++v) out << v << ' ' << pg.block[v] << '\n';
  }
  std::cerr << pg.graph.node_count() << " nodes, " << pg.graph.edge_count() << " edges\n";
}

void cmd_partition(const Options& o) {
  const LoadedGraph lg = load_edge_list(o.input, o.weighted);
  const Partitioning p = partition_graph(lg.graph, o);
  save_partition(o.output, p, lg.original_ids);
  std::cerr << "k=" << p.k << " edge_cut=" << edge_cut(lg.graph, p)
            << " max_block=" << p.max_block_size()
            << " capacity=" << block_capacity(lg.graph.node_count(), p.k, p.epsilon) << '\n';
}

void cmd_abstract(const Options& o) {
  const LoadedGraph lg = load_edge_list(o.input, o.weighted);
  const Partitioning p = partition_graph(lg.graph, o);
  const AbstractGraph ga = build_abstract(lg.graph, p);
  save_edge_list(o.output, ga.core, true);
  if (!o.mapping_out.empty()) save_abstract_mapping(o.mapping_out, ga, lg.original_ids);
  std::cerr << "abstract graph: " << ga.k() << " nodes, " << ga.core.edge_count() << " edges\n";
}

void cmd_embed_abstract(const Options& o) {
  const LoadedGraph lg = load_edge_list(o.input, true);
  WalkParams wp = o.walks;
  if (!o.model_path.empty()) {
    const auto sel = select_hyperparameters(load_model(o.model_path), lg.graph,
                                            make_grid(o.grid_walks, o.grid_lengths));
    wp = sel.combo.walk_params();
    std::cerr << "selected walks_per_node=" << wp.walks_per_node
              << " walk_length=" << wp.walk_length << '\n';
  }
  SkipGramParams sp = o.sp;
  sp.threads = o.threads;
  const WalkCorpus corpus = generate_walks(lg.graph, wp, mix_seed(o.seed, 1), o.threads);
  save_embedding(o.output, train_skipgram(corpus, sp, nullptr, mix_seed(o.seed, 2)),
                 lg.original_ids);
}

void cmd_init(const Options& o) {
  const LoadedGraph lg = load_edge_list(o.input, o.weighted);
  const GpaInitResult r = run_gpa_init(lg.graph, gpa_config(o), o.seed);
  save_embedding(o.output, r.embedding(), lg.original_ids);
  if (!o.mapping_out.empty()) save_abstract_mapping(o.mapping_out, r.abstract_graph, lg.original_ids);
  if (!o.trace_out.empty()) {
    auto out = open_output(o.trace_out);
    write_delta_trace(out, r.propagation);
  }
  std::cerr << "k=" << r.partitioning.k << " abstract_edges=" << r.abstract_graph.core.edge_count()
            << " abstract_walks=" << r.abstract_walks.walks_per_node << 'x'
            << r.abstract_walks.walk_length << " iterations=" << r.propagation.iterations()
            << (r.propagation.converged ? " converged" : " not converged")
            << " seconds=" << r.total_seconds() << '\n';
}

EmbeddingMatrix align_embedding(const LoadedEmbedding& e, const LoadedGraph& lg) {
  if (e.matrix.rows() != lg.graph.node_count()) {
    throw DomainError("initial embedding has " + std::to_string(e.matrix.rows()) +
                      " rows, graph has " + std::to_string(lg.graph.node_count()) + " nodes");
  }
  const auto index = lg.dense_index();
  EmbeddingMatrix out(e.matrix.rows(), e.matrix.dim());
  std::vector<bool> seen(e.matrix.rows(), false);
  for (std::size_t r = 0; r < e.ids.size(); ++r) {
    const auto it = index.find(e.ids[r]);
    if (it == index.end() || seen[it->second]) {
      throw DomainError("initial embedding row " + std::to_string(e.ids[r]) +
                        " is unknown or repeated");
    }
    seen[it->second] = true;
    const auto src = e.matrix.row(r);
    std::copy(src.begin(), src.end(), out.row(it->second).begin());
  }
  return out;
}

void cmd_embed(const Options& o) {
  const LoadedGraph lg = load_edge_list(o.input, o.weighted);
  SkipGramParams sp = o.sp;
  sp.threads = o.threads;
  std::optional<EmbeddingMatrix> init;
  if (!o.init_path.empty()) {
    init = align_embedding(load_embedding(o.init_path), lg);
    sp.dim = init->dim();
  }
  const EmbeddingMatrix emb =
      embed_graph(lg.graph, o.walks, sp, init ? &*init : nullptr, o.seed);
  save_embedding(o.output, emb, lg.original_ids);
}

void cmd_hyperlearn(const Options& o) {
  RandomGraphOptions ro;
  ro.min_nodes = o.min_nodes;
  ro.max_nodes = o.max_nodes;
  if (ro.min_nodes < 2 || ro.min_nodes > ro.max_nodes) throw DomainError("need 2 <= min-nodes <= max-nodes");
  const auto graphs = generate_random_abstract_graphs(o.graph_count, mix_seed(o.seed, 1), ro);
  const HyperGrid grid = make_grid(o.grid_walks, o.grid_lengths);
  const HybridDataset data = build_dataset(graphs, grid, o.sp, mix_seed(o.seed, 2), o.threads);
  if (!o.dataset_out.empty()) {
    auto out = open_output(o.dataset_out);
    write_dataset_csv(out, data);
  }
  FitOptions fo;
  fo.epochs = o.fit_epochs;
  fo.lr = o.fit_lr;
  fo.seed = mix_seed(o.seed, 3);
  const FitResult fr = fit(data, fo);
  save_model(o.output, fr.model);
  std::cerr << data.rows() << " rows, mse=" << fr.mse_history.back()
            << " baseline_mse=" << fr.baseline_mse << '\n';
}

void cmd_select(const Options& o) {
  const LoadedGraph lg = load_edge_list(o.input, true);
  const auto dir = o.maximize ? SelectDirection::kMaximize : SelectDirection::kMinimize;
  const Selection s = select_hyperparameters(load_model(o.model_path), lg.graph,
                                             make_grid(o.grid_walks, o.grid_lengths), dir);
  std::cout << "walks_per_node=" << s.combo.walks_per_node << " walk_length=" << s.combo.walk_length
            << " predicted=" << s.predicted << " evaluated=" << s.evaluated << '\n';
  if (s.stats.diameter_from_largest_component) {
    std::cout << "# diameter taken over the largest component\n";
  }
}

void cmd_eval(const Options& o, Task task) {
  const LoadedGraph lg = load_edge_list(o.input, o.weighted);
  std::optional<LabelSet> labels;
  if (task == Task::kClassify) labels = load_labels(o.labels, lg);

  ComparisonConfig cfg;
  cfg.task = task;
  cfg.init = o.init_mode == "gpa" ? InitMode::kGpa : InitMode::kRandom;
  for (std::size_t i = 0; i < o.seed_count; ++i) cfg.seeds.push_back(o.seed + i);
  cfg.alpha = o.alpha;
  cfg.walks = o.walks;
  cfg.skipgram = o.sp;
  cfg.gpa = gpa_config(o);
  cfg.gpa.propagation.threads = 1;
  cfg.logreg.l2 = o.l2;
  cfg.logreg.epochs = o.logreg_epochs;
  cfg.parallel_runs = o.threads;

  const ComparisonReport report = run_comparison(lg.graph, labels ? &*labels : nullptr, cfg);
  if (o.output.empty()) {
    if (o.table) write_report_table(std::cout, report, cfg);
    else write_report_csv(std::cout, report, cfg);
  } else {
    auto out = open_output(o.output);
    write_report_csv(out, report, cfg);
    if (o.table) write_report_table(std::cout, report, cfg);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph partition-based embedding initialization toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Write a planted-partition graph");
  gen->add_option("--nodes", o.nodes, "Node count")->check(CLI::PositiveNumber);
  gen->add_option("--blocks", o.blocks, "Community count")->check(CLI::PositiveNumber);
  gen->add_option("--p-in", o.p_in, "Edge probability inside a community")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--p-out", o.p_out, "Edge probability across communities")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", o.output, "Edge list output")->required();
  gen->add_option("--labels-out", o.labels_out, "Community labels output");
  add_seed(gen, o);

  auto* part = app.add_subcommand("partition", "Balanced k-way partition");
  add_input(part, o);
  add_partition_flags(part, o);
  part->add_option("--out", o.output, "Output: node block per line")->required();
  add_seed(part, o);

  auto* abs = app.add_subcommand("abstract", "Partition and write the weighted abstract graph");
  add_input(abs, o);
  add_partition_flags(abs, o);
  abs->add_option("--out", o.output, "Abstract graph edge list (weighted)")->required();
  abs->add_option("--mapping-out", o.mapping_out, "Node to abstract node mapping");
  add_seed(abs, o);

  auto* emb_abs = app.add_subcommand("embed-abstract", "Weighted walks and skip-gram on an abstract graph");
  add_input(emb_abs, o, false);
  add_walk_flags(emb_abs, o.walks, "");
  add_skipgram_flags(emb_abs, o);
  emb_abs->add_option("--model", o.model_path, "Hyperparameter model choosing the walks");
  emb_abs->add_option("--out", o.output, "Embedding output")->required();
  add_seed(emb_abs, o);

  auto* init = app.add_subcommand("init", "GPA initialization: partition, abstract embedding, propagation");
  add_input(init, o);
  add_gpa_flags(init, o);
  add_skipgram_flags(init, o);
  init->add_option("--out", o.output, "Initial embedding output")->required();
  init->add_option("--mapping-out", o.mapping_out, "Node to abstract node mapping");
  init->add_option("--trace-out", o.trace_out, "Propagation delta trace (CSV)");
  add_seed(init, o);

  auto* embed = app.add_subcommand("embed", "DeepWalk-style embedding of the full graph");
  add_input(embed, o);
  add_walk_flags(embed, o.walks, "");
  add_skipgram_flags(embed, o);
  embed->add_option("--init", o.init_path, "Initial embedding (default random)");
  embed->add_option("--out", o.output, "Embedding output")->required();
  add_seed(embed, o);

  auto* learn = app.add_subcommand("hyperlearn", "Fit the walk hyperparameter regression");
  learn->add_option("--graphs", o.graph_count, "Random training graphs")->check(CLI::PositiveNumber);
  learn->add_option("--min-nodes", o.min_nodes, "Smallest training graph");
  learn->add_option("--max-nodes", o.max_nodes, "Largest training graph");
  learn->add_option("--grid-walks", o.grid_walks, "Walks-per-node grid")->delimiter(',');
  learn->add_option("--grid-lengths", o.grid_lengths, "Walk-length grid")->delimiter(',');
  add_skipgram_flags(learn, o);
  learn->add_option("--fit-epochs", o.fit_epochs, "Regression SGD epochs")->check(CLI::PositiveNumber);
  learn->add_option("--fit-lr", o.fit_lr, "Regression SGD learning rate")->check(CLI::PositiveNumber);
  learn->add_option("--dataset-out", o.dataset_out, "Training rows as CSV");
  learn->add_option("--out", o.output, "Model output")->required();
  add_seed(learn, o);

  auto* select = app.add_subcommand("select-hp", "Pick walk hyperparameters for an abstract graph");
  add_input(select, o, false);
  select->add_option("--model", o.model_path, "Model from hyperlearn")->required();
  select->add_option("--grid-walks", o.grid_walks, "Walks-per-node grid")->delimiter(',');
  select->add_option("--grid-lengths", o.grid_lengths, "Walk-length grid")->delimiter(',');
  select->add_flag("--maximize", o.maximize, "Pick the highest prediction instead of the lowest");
  add_seed(select, o);

  CLI::App* evals[2] = {
      app.add_subcommand("eval-link", "Link prediction, GPA vs random initialization"),
      app.add_subcommand("eval-classify", "Node classification, GPA vs random initialization")};
  for (auto* cmd : evals) {
    add_input(cmd, o);
    cmd->add_option("--init", o.init_mode, "gpa or random")->check(CLI::IsMember({"gpa", "random"}));
    cmd->add_option("--seeds", o.seed_count, "Runs, seeded seed .. seed+N-1")->check(CLI::PositiveNumber);
    add_walk_flags(cmd, o.walks, "");
    add_skipgram_flags(cmd, o);
    add_gpa_flags(cmd, o);
    cmd->add_option("--out", o.output, "CSV report (default stdout)");
    cmd->add_flag("--table", o.table, "Print a text table");
    add_seed(cmd, o);
  }
  evals[0]->add_option("--alpha", o.alpha, "Held-out edge fraction")->check(CLI::Range(1e-9, 1.0 - 1e-9));
  evals[1]->add_option("--labels", o.labels, "Labels: node label[,label...] per line")->required();
  evals[1]->add_option("--l2", o.l2, "Logistic regression L2 strength")->check(CLI::NonNegativeNumber);
  evals[1]->add_option("--logreg-epochs", o.logreg_epochs, "Logistic regression epochs")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (o.quiet) set_warnings_enabled(false);

  try {
    if (*gen) cmd_generate(o);
    else if (*part) cmd_partition(o);
    else if (*abs) cmd_abstract(o);
    else if (*emb_abs) cmd_embed_abstract(o);
    else if (*init) cmd_init(o);
    else if (*embed) cmd_embed(o);
    else if (*learn) cmd_hyperlearn(o);
    else if (*select) cmd_select(o);
    else if (*evals[0]) cmd_eval(o, Task::kLink);
    else if (*evals[1]) cmd_eval(o, Task::kClassify);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
