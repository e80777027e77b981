#include "relgap/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "relgap/csv.hpp"

namespace relgap {
namespace {

constexpr double kTau = 1e-12;
constexpr const char* kModelMagic = "relgap-svm-model";
constexpr int kModelVersion = 1;
constexpr std::array<const char*, kFeatureCount> kFeatureNames{"cn", "aa", "glove_sim"};

bool all_finite(const FeatureArray& a) {
  return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

double dot(const FeatureArray& a, const FeatureArray& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Fisher-Yates with a raw 64-bit engine, independent of library shuffles.
std::vector<std::size_t> seeded_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 engine(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(engine() % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

// Dual SMO for a linear kernel with an unregularized bias.
struct SmoSolver {
  std::vector<FeatureArray> x;
  std::vector<double> y;
  double C;
  double eps;

  std::vector<double> alpha;
  std::vector<double> grad;
  std::vector<double> diag;

  bool upper(std::size_t t) const { return alpha[t] >= C; }
  bool lower(std::size_t t) const { return alpha[t] <= 0.0; }
  double q(std::size_t a, std::size_t b) const { return y[a] * y[b] * dot(x[a], x[b]); }

  std::size_t solve(std::size_t max_iterations) {
    const std::size_t n = x.size();
    alpha.assign(n, 0.0);
    grad.assign(n, -1.0);
    diag.resize(n);
    for (std::size_t t = 0; t < n; ++t) diag[t] = dot(x[t], x[t]);

    std::size_t iter = 0;
    for (; iter < max_iterations; ++iter) {
      std::size_t i = 0, j = 0;
      if (!select(i, j)) break;
      update(i, j);
    }
    return iter;
  }

  bool select(std::size_t& out_i, std::size_t& out_j) const {
    const std::size_t n = x.size();
    const std::size_t none = n;
    double gmax = -std::numeric_limits<double>::infinity();
    double gmax2 = -std::numeric_limits<double>::infinity();
    std::size_t i = none;
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t] > 0) {
        if (!upper(t) && -grad[t] >= gmax) {
          gmax = -grad[t];
          i = t;
        }
      } else if (!lower(t) && grad[t] >= gmax) {
        gmax = grad[t];
        i = t;
      }
    }
    if (i == none) return false;

    std::size_t j = none;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      double grad_diff = 0.0;
      double quad = 0.0;
      if (y[t] > 0) {
        if (lower(t)) continue;
        gmax2 = std::max(gmax2, grad[t]);
        grad_diff = gmax + grad[t];
        quad = diag[i] + diag[t] - 2.0 * y[i] * q(i, t);
      } else {
        if (upper(t)) continue;
        gmax2 = std::max(gmax2, -grad[t]);
        grad_diff = gmax - grad[t];
        quad = diag[i] + diag[t] + 2.0 * y[i] * q(i, t);
      }
      if (grad_diff > 0.0) {
        double obj = -(grad_diff * grad_diff) / (quad > 0.0 ? quad : kTau);
        if (obj <= best) {
          best = obj;
          j = t;
        }
      }
    }
    if (gmax + gmax2 < eps || j == none) return false;
    out_i = i;
    out_j = j;
    return true;
  }

  void update(std::size_t i, std::size_t j) {
    const double old_i = alpha[i];
    const double old_j = alpha[j];
    const double qij = q(i, j);
    double& ai = alpha[i];
    double& aj = alpha[j];
    if (y[i] != y[j]) {
      double quad = diag[i] + diag[j] + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      double delta = (-grad[i] - grad[j]) / quad;
      double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) {
          aj = 0.0;
          ai = diff;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = -diff;
      }
      if (diff > 0.0) {
        if (ai > C) {
          ai = C;
          aj = C - diff;
        }
      } else if (aj > C) {
        aj = C;
        ai = C + diff;
      }
    } else {
      double quad = diag[i] + diag[j] - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      double delta = (grad[i] - grad[j]) / quad;
      double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > C) {
        if (ai > C) {
          ai = C;
          aj = sum - C;
        }
      } else if (aj < 0.0) {
        aj = 0.0;
        ai = sum;
      }
      if (sum > C) {
        if (aj > C) {
          aj = C;
          ai = sum - C;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = sum;
      }
    }
    const double di = ai - old_i;
    const double dj = aj - old_j;
    for (std::size_t t = 0; t < x.size(); ++t) {
      grad[t] += q(t, i) * di + q(t, j) * dj;
    }
  }

  double bias() const {
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    double sum_free = 0.0;
    std::size_t n_free = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      double yg = y[t] * grad[t];
      if (upper(t)) {
        if (y[t] < 0) ub = std::min(ub, yg);
        else lb = std::max(lb, yg);
      } else if (lower(t)) {
        if (y[t] > 0) ub = std::min(ub, yg);
        else lb = std::max(lb, yg);
      } else {
        ++n_free;
        sum_free += yg;
      }
    }
    double rho = n_free > 0 ? sum_free / static_cast<double>(n_free) : (ub + lb) / 2.0;
    return -rho;
  }

  FeatureArray weights() const {
    FeatureArray w{0.0, 0.0, 0.0};
    for (std::size_t t = 0; t < x.size(); ++t) {
      for (std::size_t d = 0; d < kFeatureCount; ++d) w[d] += alpha[t] * y[t] * x[t][d];
    }
    return w;
  }
};

void require_finite(const FeatureArray& raw) {
  if (!all_finite(raw)) throw InputError("non-finite feature value");
}

}  // namespace

FeatureArray to_array(const FeatureVector& fv) {
  return {static_cast<double>(fv.cn), fv.aa, fv.glove_sim.value_or(0.0)};
}

FeatureArray Scaler::transform(const FeatureArray& raw) const {
  FeatureArray out;
  for (std::size_t d = 0; d < kFeatureCount; ++d) out[d] = (raw[d] - mean[d]) / std[d];
  return out;
}

Scaler fit_scaler(std::span<const FeatureArray> rows) {
  if (rows.size() < 2) throw TrainingError("scaler needs at least two rows");
  Scaler s;
  const double n = static_cast<double>(rows.size());
  for (std::size_t d = 0; d < kFeatureCount; ++d) {
    double sum = 0.0;
    for (const auto& r : rows) sum += r[d];
    s.mean[d] = sum / n;
    double ss = 0.0;
    for (const auto& r : rows) ss += (r[d] - s.mean[d]) * (r[d] - s.mean[d]);
    double sd = std::sqrt(ss / n);
    s.std[d] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

Scaler fit_scaler(std::span<const FeatureVector> rows) {
  std::vector<FeatureArray> raw;
  raw.reserve(rows.size());
  for (const auto& fv : rows) raw.push_back(to_array(fv));
  return fit_scaler(raw);
}

SvmModel train_svm(std::span<const TrainingExample> data, const SvmOptions& options) {
  if (!(options.C > 0.0) || !std::isfinite(options.C)) {
    throw TrainingError("C must be a positive finite number");
  }
  std::size_t positives = 0;
  for (const auto& ex : data) {
    if (!all_finite(ex.x)) throw TrainingError("non-finite feature in training data");
    positives += ex.positive ? 1 : 0;
  }
  if (positives == 0 || positives == data.size()) {
    throw TrainingError("training data must contain both positive and negative pairs");
  }

  std::vector<FeatureArray> raw;
  raw.reserve(data.size());
  for (const auto& ex : data) raw.push_back(ex.x);

  SvmModel model;
  model.scaler = fit_scaler(raw);
  model.C = options.C;
  model.seed = options.seed;
  model.tolerance = options.tolerance;

  SmoSolver solver{{}, {}, options.C, options.tolerance, {}, {}, {}};
  for (std::size_t idx : seeded_order(data.size(), options.seed)) {
    solver.x.push_back(model.scaler.transform(data[idx].x));
    solver.y.push_back(data[idx].positive ? 1.0 : -1.0);
  }
  model.iterations = solver.solve(options.max_iterations);
  model.weights = solver.weights();
  model.bias = solver.bias();
  if (!all_finite(model.weights) || !std::isfinite(model.bias)) {
    throw TrainingError("solver produced non-finite parameters");
  }
  return model;
}

SvmModel train_svm(std::span<const LabeledPair> data, double C, std::uint64_t seed) {
  std::vector<TrainingExample> examples;
  examples.reserve(data.size());
  for (const auto& p : data) examples.push_back({to_array(p.features), p.positive});
  SvmOptions options;
  options.C = C;
  options.seed = seed;
  return train_svm(examples, options);
}

double svm_objective(const SvmModel& model, std::span<const TrainingExample> data) {
  double loss = 0.0;
  for (const auto& ex : data) {
    double f = dot(model.weights, model.scaler.transform(ex.x)) + model.bias;
    loss += std::max(0.0, 1.0 - (ex.positive ? 1.0 : -1.0) * f);
  }
  return 0.5 * dot(model.weights, model.weights) + model.C * loss;
}

Prediction predict(const SvmModel& model, const FeatureArray& raw) {
  require_finite(raw);
  double margin = dot(model.weights, model.scaler.transform(raw)) + model.bias;
  return {margin > 0.0, margin};
}

Prediction predict(const SvmModel& model, const FeatureVector& fv) {
  return predict(model, to_array(fv));
}

void save_model(std::ostream& out, const SvmModel& model) {
  using csv::format_double;
  out << kModelMagic << ' ' << kModelVersion << '\n';
  for (std::size_t d = 0; d < kFeatureCount; ++d) {
    out << "weight." << kFeatureNames[d] << ' ' << format_double(model.weights[d]) << '\n';
  }
  out << "bias " << format_double(model.bias) << '\n';
  for (std::size_t d = 0; d < kFeatureCount; ++d) {
    out << "scaler.mean." << kFeatureNames[d] << ' ' << format_double(model.scaler.mean[d])
        << '\n';
  }
  for (std::size_t d = 0; d < kFeatureCount; ++d) {
    out << "scaler.std." << kFeatureNames[d] << ' ' << format_double(model.scaler.std[d])
        << '\n';
  }
  out << "C " << format_double(model.C) << '\n';
  out << "seed " << model.seed << '\n';
  out << "tolerance " << format_double(model.tolerance) << '\n';
  out << "iterations " << model.iterations << '\n';
  out << "end\n";
}

SvmModel load_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("model file is empty");
  {
    std::istringstream head(line);
    std::string magic;
    int version = 0;
    if (!(head >> magic >> version) || magic != kModelMagic) {
      throw InputError("not a model file (bad header)");
    }
    if (version != kModelVersion) {
      throw InputError("unsupported model version " + std::to_string(version));
    }
  }

  std::map<std::string, std::string> fields;
  bool ended = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line == "end") {
      ended = true;
      break;
    }
    auto cut = line.find(' ');
    if (cut == std::string::npos) throw ParseError(line_no, line, "expected 'key value'");
    if (!fields.emplace(line.substr(0, cut), line.substr(cut + 1)).second) {
      throw ParseError(line_no, line, "duplicate key");
    }
  }
  if (!ended) throw InputError("model file is truncated (missing 'end')");

  auto number = [&](const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw InputError("model file lacks '" + key + "'");
    try {
      return csv::parse_double(it->second, 0);
    } catch (const ParseError&) {
      throw InputError("model field '" + key + "' is not a finite number");
    }
  };
  auto integer = [&](const std::string& key) -> std::uint64_t {
    auto it = fields.find(key);
    if (it == fields.end()) throw InputError("model file lacks '" + key + "'");
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != it->second.size() || it->second[0] == '-') {
      throw InputError("model field '" + key + "' is not an unsigned integer");
    }
    return v;
  };

  SvmModel m;
  for (std::size_t d = 0; d < kFeatureCount; ++d) {
    std::string name = kFeatureNames[d];
    m.weights[d] = number("weight." + name);
    m.scaler.mean[d] = number("scaler.mean." + name);
    m.scaler.std[d] = number("scaler.std." + name);
    if (!(m.scaler.std[d] > 0.0)) throw InputError("scaler std must be positive");
  }
  m.bias = number("bias");
  m.C = number("C");
  m.seed = integer("seed");
  m.tolerance = number("tolerance");
  m.iterations = static_cast<std::size_t>(integer("iterations"));
  return m;
}

void save_model(const std::string& path, const SvmModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  save_model(out, model);
  if (!out) throw InputError("failed writing '" + path + "'");
}

SvmModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return load_model(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<TrainingPair> read_training_pairs(std::istream& in) {
  auto table = csv::read(in);
  std::size_t cx = table.require_column("class_x");
  std::size_t cy = table.require_column("class_y");
  std::size_t cl = table.require_column("label");
  std::vector<TrainingPair> pairs;
  pairs.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& f = table.rows[r];
    TrainingPair p{f[cx], f[cy], false};
    if (f[cl] == "1") {
      p.positive = true;
    } else if (f[cl] != "0") {
      throw ParseError(table.line_numbers[r], f[cl], "label must be 1 or 0");
    }
    if (p.class_x.empty() || p.class_y.empty()) {
      throw ParseError(table.line_numbers[r], p.class_x + "," + p.class_y, "empty class name");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<TrainingPair> read_training_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_training_pairs(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ClassBalance class_balance(std::span<const TrainingPair> pairs) {
  ClassBalance b;
  for (const auto& p : pairs) (p.positive ? b.positives : b.negatives)++;
  return b;
}

ClassBalance class_balance(std::span<const LabeledPair> pairs) {
  ClassBalance b;
  for (const auto& p : pairs) (p.positive ? b.positives : b.negatives)++;
  return b;
}

std::optional<Iri> resolve_class(const Ontology& o, const std::string& name) {
  if (Iri exact{name}; o.classes.count(exact) != 0) return exact;
  for (const auto& c : o.classes) {
    if (o.display_label(c) == name) return c;
  }
  for (const auto& c : o.classes) {
    if (local_name(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<LabeledPair> featurize_training_pairs(const Ontology& background,
                                                  const ClassGraph& graph,
                                                  const EmbeddingStore& store,
                                                  std::span<const TrainingPair> pairs,
                                                  Warnings* warnings) {
  std::map<std::string, std::optional<Iri>> resolved;
  auto lookup = [&](const std::string& name) -> const std::optional<Iri>& {
    auto it = resolved.find(name);
    if (it != resolved.end()) return it->second;
    auto iri = resolve_class(background, name);
    if (!iri) warn(warnings, "training class \"" + name + "\" not in background ontology");
    return resolved.emplace(name, std::move(iri)).first->second;
  };

  std::vector<LabeledPair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    const auto& x = lookup(p.class_x);
    const auto& y = lookup(p.class_y);
    if (x && y && *x == *y) {
      warn(warnings, "skipping training pair (" + p.class_x + ", " + p.class_y +
                         "): both name the same class");
      continue;
    }
    LabeledPair lp{p.class_x, p.class_y, {}, p.positive};
    if (x && y && graph.contains(*x) && graph.contains(*y)) {
      // A positive pair's own edge never touches a common neighbour, so the
      // features are unchanged with that edge held out.
      lp.features.cn = common_neighbours(graph, *x, *y);
      lp.features.aa = adamic_adar(graph, *x, *y);
    }
    std::string label_x = x ? background.display_label(*x) : p.class_x;
    std::string label_y = y ? background.display_label(*y) : p.class_y;
    lp.features.glove_sim = label_similarity(store, label_x, label_y, warnings);
    out.push_back(std::move(lp));
  }
  return out;
}

std::vector<LabeledPair> labeled_pairs_from_dump(std::span<const FeatureRecord> records,
                                                 Warnings* warnings) {
  std::vector<LabeledPair> out;
  std::size_t unlabeled = 0;
  for (const auto& r : records) {
    if (!r.label) {
      ++unlabeled;
      continue;
    }
    out.push_back({r.class_x, r.class_y, r.features, *r.label});
  }
  if (unlabeled > 0) {
    warn(warnings, "ignored " + std::to_string(unlabeled) + " unlabeled feature rows");
  }
  return out;
}

}  // namespace relgap
