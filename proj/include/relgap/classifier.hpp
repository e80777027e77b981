#pragma once

// Soft-margin linear SVM over standardized (cn, aa, glove_sim) features.
//
// Training minimizes 1/2 |w|^2 + C * sum_i max(0, 1 - y_i (w . z_i + b)) where
// z_i are the standardized feature rows. The dual is solved with SMO using
// second-order working-set selection; the seed fixes the row order the solver
// visits, so (data, C, seed) determine the model bit-for-bit.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "relgap/features.hpp"
#include "relgap/ontology.hpp"

namespace relgap {

inline constexpr std::size_t kFeatureCount = 3;
using FeatureArray = std::array<double, kFeatureCount>;

// (cn, aa, glove_sim) with a missing glove_sim imputed as 0.0.
FeatureArray to_array(const FeatureVector& fv);

struct Scaler {
  FeatureArray mean{0.0, 0.0, 0.0};
  FeatureArray std{1.0, 1.0, 1.0};

  FeatureArray transform(const FeatureArray& raw) const;
  bool operator==(const Scaler&) const = default;
};

// Per-dimension mean and population standard deviation; a zero deviation is
// replaced by 1.0. Throws TrainingError for fewer than two rows.
Scaler fit_scaler(std::span<const FeatureArray> rows);
Scaler fit_scaler(std::span<const FeatureVector> rows);

struct LabeledPair {
  std::string class_x;
  std::string class_y;
  FeatureVector features;
  bool positive = false;
};

struct TrainingExample {
  FeatureArray x;
  bool positive = false;
};

struct SvmOptions {
  double C = 1.0;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
  std::size_t max_iterations = 10'000'000;
};

struct SvmModel {
  FeatureArray weights{0.0, 0.0, 0.0};
  double bias = 0.0;
  Scaler scaler;
  double C = 1.0;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
  std::size_t iterations = 0;

  bool operator==(const SvmModel&) const = default;
};

// Throws TrainingError on single-class data, non-finite features or a
// non-positive C.
SvmModel train_svm(std::span<const TrainingExample> data, const SvmOptions& options = {});
SvmModel train_svm(std::span<const LabeledPair> data, double C = 1.0, std::uint64_t seed = 42);

// Regularized hinge objective of `model` on `data`, in standardized space.
double svm_objective(const SvmModel& model, std::span<const TrainingExample> data);

struct Prediction {
  bool positive = false;
  double margin = 0.0;
};

// margin = w . standardize(raw) + b; positive iff margin > 0. Throws
// InputError on non-finite input.
Prediction predict(const SvmModel& model, const FeatureArray& raw);
Prediction predict(const SvmModel& model, const FeatureVector& fv);

// Versioned key-value text; every double is written in shortest round-trip
// form so load(save(m)) == m.
void save_model(std::ostream& out, const SvmModel& model);
SvmModel load_model(std::istream& in);
void save_model(const std::string& path, const SvmModel& model);
SvmModel load_model(const std::string& path);

// ---------------------------------------------------------------------------
// Training-pair files.

struct TrainingPair {
  std::string class_x;
  std::string class_y;
  bool positive = false;
};

struct ClassBalance {
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

// CSV with header class_x,class_y,label and label in {1,0}.
std::vector<TrainingPair> read_training_pairs(std::istream& in);
std::vector<TrainingPair> read_training_pairs_file(const std::string& path);

ClassBalance class_balance(std::span<const TrainingPair> pairs);
ClassBalance class_balance(std::span<const LabeledPair> pairs);

// Finds the class a training name refers to: exact IRI, then display label,
// then IRI local name.
std::optional<Iri> resolve_class(const Ontology& o, const std::string& name);

// Computes features for each training pair against a background ontology.
// Names that resolve to no class are treated as isolated nodes and compared by
// their own text; each such name produces a warning.
std::vector<LabeledPair> featurize_training_pairs(const Ontology& background,
                                                  const ClassGraph& graph,
                                                  const EmbeddingStore& store,
                                                  std::span<const TrainingPair> pairs,
                                                  Warnings* warnings = nullptr);

std::vector<LabeledPair> labeled_pairs_from_dump(std::span<const FeatureRecord> records,
                                                 Warnings* warnings = nullptr);

}  // namespace relgap
