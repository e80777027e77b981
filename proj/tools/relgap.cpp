// relgap: find relation-gaps (unconnected but plausibly related class pairs)
// in an ontology.
//
// Exit codes: 0 success, 2 input/parse error, 3 training error,
// 4 evaluation error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relgap/candidates.hpp"
#include "relgap/classifier.hpp"
#include "relgap/csv.hpp"
#include "relgap/eval.hpp"
#include "relgap/features.hpp"
#include "relgap/graph.hpp"
#include "relgap/ontology.hpp"

namespace {

using namespace relgap;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTraining = 3;
constexpr int kExitEval = 4;

constexpr double kDefaultWvThreshold = 0.5;
constexpr std::size_t kDefaultMaxPairs = 10'000'000;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void flush_warnings(Warnings& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  warnings.clear();
}

// Writes to `path`, or stdout when it is empty or "-".
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

void require_finite(double v, const char* flag) {
  if (!std::isfinite(v)) throw InputError(std::string(flag) + " must be finite");
}

// Keeps only the embedding rows needed for the ontology's class labels.
TokenFilter label_vocabulary(const Ontology& o) {
  auto vocab = std::make_shared<std::set<std::string>>();
  for (const auto& c : o.classes) {
    for (auto& t : tokenize_label(o.display_label(c))) vocab->insert(std::move(t));
  }
  return [vocab](std::string_view token) { return vocab->count(std::string(token)) != 0; };
}

struct StatsArgs {
  std::string ontology;
};

int run_stats(const StatsArgs& args) {
  Warnings warnings;
  auto o = load_ontology(args.ontology, &warnings);
  flush_warnings(warnings);
  auto s = summarize(o);
  std::ostringstream out;
  out << "dataset,classes,individuals,object_properties,op_without_domain_range\n"
      << csv::join({std::filesystem::path(args.ontology).stem().string(),
                    std::to_string(s.n_classes), std::to_string(s.n_individuals),
                    std::to_string(s.n_object_properties),
                    std::to_string(s.n_op_without_domain_range)})
      << '\n';
  write_output("", out.str());
  return kExitOk;
}

struct TrainArgs {
  std::string pairs;
  std::string ontology;
  std::string features;
  std::string embeddings;
  std::string out;
  std::string dump_features;
  double C = 1.0;
  std::uint64_t seed = 42;
  double holdout = 0.0;
};

int run_train(const TrainArgs& args) {
  require_finite(args.C, "--C");
  require_finite(args.holdout, "--holdout");
  if (args.holdout < 0.0 || args.holdout >= 1.0) throw InputError("--holdout must be in [0,1)");
  Warnings warnings;

  std::vector<LabeledPair> data;
  if (!args.features.empty()) {
    if (!args.pairs.empty() || !args.ontology.empty()) {
      throw InputError("--features cannot be combined with --pairs/--ontology");
    }
    auto records = read_feature_dump_file(args.features);
    data = labeled_pairs_from_dump(records, &warnings);
  } else {
    if (args.pairs.empty() || args.ontology.empty()) {
      throw InputError("train needs --features, or --pairs together with --ontology");
    }
    auto pairs = read_training_pairs_file(args.pairs);
    auto background = load_ontology(args.ontology, &warnings);
    auto graph = build_class_graph(background);
    EmbeddingStore store;
    Warnings similarity_warnings;
    if (!args.embeddings.empty()) {
      store = load_glove(args.embeddings);
    } else {
      warnings.push_back("no --embeddings given: glove_sim is missing for every pair");
    }
    data = featurize_training_pairs(background, graph, store, pairs,
                                    args.embeddings.empty() ? &similarity_warnings : &warnings);
  }
  flush_warnings(warnings);

  if (!args.dump_features.empty()) {
    std::vector<FeatureRecord> records;
    for (const auto& p : data) records.push_back({p.class_x, p.class_y, p.features, p.positive});
    std::ostringstream dump;
    write_feature_dump(dump, records);
    write_output(args.dump_features, dump.str());
  }

  // Optional seeded train/holdout split.
  std::vector<LabeledPair> train = data;
  std::vector<LabeledPair> held;
  if (args.holdout > 0.0) {
    std::vector<std::size_t> order(data.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 engine(args.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[static_cast<std::size_t>(engine() % i)]);
    }
    auto n_held = static_cast<std::size_t>(std::floor(args.holdout * static_cast<double>(data.size())));
    train.clear();
    for (std::size_t k = 0; k < order.size(); ++k) {
      (k < n_held ? held : train).push_back(data[order[k]]);
    }
  }

  auto balance = class_balance(std::span<const LabeledPair>(train));
  std::cerr << "training pairs: " << train.size() << " (positives " << balance.positives
            << ", negatives " << balance.negatives << ")\n";

  auto model = train_svm(train, args.C, args.seed);
  std::vector<TrainingExample> examples;
  for (const auto& p : train) examples.push_back({to_array(p.features), p.positive});
  std::cerr << "objective: " << csv::format_double(svm_objective(model, examples)) << '\n'
            << "iterations: " << model.iterations << '\n';

  if (!held.empty()) {
    std::size_t right = 0;
    for (const auto& p : held) right += predict(model, p.features).positive == p.positive;
    std::cerr << "holdout accuracy: " << right << "/" << held.size() << '\n';
  }

  std::ostringstream text;
  save_model(text, model);
  write_output(args.out, text.str());
  return kExitOk;
}

struct PredictArgs {
  std::string ontology;
  std::string embeddings;
  std::string model;
  std::string out;
  bool no_exclude_subclass = false;
  std::size_t max_pairs = kDefaultMaxPairs;
  bool preload_report = false;
};

int run_predict(const PredictArgs& args) {
  auto start = Clock::now();
  Warnings warnings;
  auto model = load_model(args.model);
  auto o = load_ontology(args.ontology, &warnings);
  auto g = build_class_graph(o);

  auto load_start = Clock::now();
  auto store = load_glove(args.embeddings, label_vocabulary(o));
  double load_seconds = seconds_since(load_start);

  EnumerateOptions options;
  options.exclude_subclass = !args.no_exclude_subclass;
  options.max_pairs = args.max_pairs;
  auto pairs = enumerate_candidates(o, g, options);
  auto ranked = rank_candidates(model, g, store, o.labels, pairs, &warnings);

  std::ostringstream csv_text;
  write_candidates_csv(csv_text, ranked);
  write_output(args.out, csv_text.str());
  double elapsed = seconds_since(start);

  flush_warnings(warnings);
  std::fprintf(stderr, "candidates: %zu of %zu unconnected pairs\n", ranked.size(), pairs.size());
  std::fprintf(stderr, "elapsed_seconds: %.3f\n", elapsed);
  if (args.preload_report) {
    std::fprintf(stderr, "embedding_load_seconds: %.3f\n", load_seconds);
    std::fprintf(stderr, "method_seconds: %.3f\n", elapsed - load_seconds);
  }
  return kExitOk;
}

struct BaselineArgs {
  std::string system;
  std::string ontology;
  std::string embeddings;
  std::string out;
  std::optional<double> threshold;
  bool no_exclude_subclass = false;
  std::size_t max_pairs = kDefaultMaxPairs;
};

int run_baseline(const BaselineArgs& args) {
  Warnings warnings;
  auto o = load_ontology(args.ontology, &warnings);
  auto g = build_class_graph(o);
  EnumerateOptions options;
  options.exclude_subclass = !args.no_exclude_subclass;
  options.max_pairs = args.max_pairs;

  std::vector<ScoredPair> result;
  if (args.system == "prophet") {
    double threshold = args.threshold.value_or(kProphetThreshold);
    require_finite(threshold, "--threshold");
    auto pairs = enumerate_candidates(o, g, options);
    result = prophet_baseline(build_instance_graph(o), o, pairs, threshold);
  } else {
    if (args.embeddings.empty()) throw InputError("baseline wv needs --embeddings");
    double threshold = args.threshold.value_or(kDefaultWvThreshold);
    require_finite(threshold, "--threshold");
    if (threshold < -1.0 || threshold > 1.0) throw InputError("--threshold must be in [-1,1]");
    auto store = load_glove(args.embeddings, label_vocabulary(o));
    auto pairs = enumerate_candidates(o, g, options);
    result = wv_baseline(store, o.labels, pairs, threshold, &warnings);
  }

  std::ostringstream text;
  write_baseline_csv(text, result);
  write_output(args.out, text.str());
  flush_warnings(warnings);
  if (result.empty()) std::cerr << "no results\n";
  return kExitOk;
}

struct EvalArgs {
  std::vector<std::string> predictions;
  std::string judgments;
  std::vector<std::string> systems;
  std::vector<double> elapsed;
  std::string dataset;
  std::string out;
};

int run_eval(const EvalArgs& args) {
  if (!args.systems.empty() && args.systems.size() != args.predictions.size()) {
    throw InputError("--system must be given once per --predictions file");
  }
  if (!args.elapsed.empty() && args.elapsed.size() != args.predictions.size()) {
    throw InputError("--elapsed must be given once per --predictions file");
  }
  auto judgments = read_judgments_file(args.judgments);
  std::vector<std::vector<NamePair>> predicted;
  for (const auto& path : args.predictions) predicted.push_back(read_predicted_pairs_file(path));

  std::vector<SystemReport> reports;
  for (std::size_t i = 0; i < args.predictions.size(); ++i) {
    auto report = precision(predicted[i], judgments);
    report.dataset = args.dataset;
    report.system = args.systems.empty()
                        ? std::filesystem::path(args.predictions[i]).stem().string()
                        : args.systems[i];
    if (!args.elapsed.empty()) report.elapsed_seconds = args.elapsed[i];
    reports.push_back(std::move(report));
  }
  write_output(args.out, compare_report(reports));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identify relation-gaps (plausible but missing class connections) in an ontology"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print class/individual/property counts");
  stats_cmd->add_option("ontology,--ontology", stats.ontology, "N-Triples ontology")
      ->required()
      ->check(CLI::ExistingFile);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train the pair classifier");
  train_cmd->add_option("--pairs", train.pairs, "Training pairs CSV (class_x,class_y,label)")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--ontology", train.ontology, "Background ontology for features")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--features", train.features, "Precomputed feature dump CSV")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--embeddings", train.embeddings, "GloVe text vectors")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--out,-o", train.out, "Model file to write")->required();
  train_cmd->add_option("--dump-features", train.dump_features, "Also write the feature rows");
  train_cmd->add_option("--C", train.C, "Soft-margin penalty")->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Solver/split seed")->capture_default_str();
  train_cmd->add_option("--holdout", train.holdout, "Fraction held out for accuracy")
      ->capture_default_str();

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "Rank unconnected class pairs");
  predict_cmd->add_option("--ontology", predict_args.ontology, "N-Triples ontology")
      ->required()
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--embeddings", predict_args.embeddings, "GloVe text vectors")
      ->required()
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--model", predict_args.model, "Trained model file")
      ->required()
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--out,-o", predict_args.out, "Candidates CSV (default stdout)");
  predict_cmd->add_flag("--no-exclude-subclass", predict_args.no_exclude_subclass,
                        "Keep pairs related by a subclass axiom");
  predict_cmd->add_option("--max-pairs", predict_args.max_pairs, "Pair-space limit")
      ->capture_default_str();
  predict_cmd->add_flag("--preload-report", predict_args.preload_report,
                        "Also report time excluding the embedding load");

  BaselineArgs baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Run a comparison system");
  baseline_cmd->add_option("system", baseline.system, "prophet or wv")
      ->required()
      ->check(CLI::IsMember({"prophet", "wv"}));
  baseline_cmd->add_option("--ontology", baseline.ontology, "N-Triples ontology")
      ->required()
      ->check(CLI::ExistingFile);
  baseline_cmd->add_option("--embeddings", baseline.embeddings, "GloVe text vectors (wv)")
      ->check(CLI::ExistingFile);
  baseline_cmd->add_option("--threshold", baseline.threshold,
                           "Strict lower bound on the score (prophet 10, wv 0.5)");
  baseline_cmd->add_option("--out,-o", baseline.out, "Output CSV (default stdout)");
  baseline_cmd->add_flag("--no-exclude-subclass", baseline.no_exclude_subclass,
                         "Keep pairs related by a subclass axiom");
  baseline_cmd->add_option("--max-pairs", baseline.max_pairs, "Pair-space limit")
      ->capture_default_str();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Precision against a judgments file");
  eval_cmd->add_option("--predictions,-p", eval.predictions, "Ranked output CSV (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--judgments,-j", eval.judgments, "Judgments CSV")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--system", eval.systems, "System name per predictions file");
  eval_cmd->add_option("--elapsed", eval.elapsed, "Elapsed seconds per predictions file");
  eval_cmd->add_option("--dataset", eval.dataset, "Dataset name for the table");
  eval_cmd->add_option("--out,-o", eval.out, "Report CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (stats_cmd->parsed()) return run_stats(stats);
    if (train_cmd->parsed()) return run_train(train);
    if (predict_cmd->parsed()) return run_predict(predict_args);
    if (baseline_cmd->parsed()) return run_baseline(baseline);
    if (eval_cmd->parsed()) return run_eval(eval);
  } catch (const TrainingError& e) {
    std::cerr << "training error: " << e.what() << '\n';
    return kExitTraining;
  } catch (const EvalError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return kExitEval;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
