#include "relgap/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <stdexcept>

#include "relgap/csv.hpp"

namespace relgap {
namespace {

void check_pair(const UndirectedGraph& g, const Iri& x, const Iri& y) {
  g.neighbours(x);
  g.neighbours(y);
  if (x == y) throw InputError("feature pair needs two distinct classes, got <" + x.value + "> twice");
}

template <class Fn>
void for_each_common(const UndirectedGraph& g, const Iri& x, const Iri& y, Fn fn) {
  const auto& ax = g.neighbours(x);
  const auto& ay = g.neighbours(y);
  auto i = ax.begin();
  auto j = ay.begin();
  while (i != ax.end() && j != ay.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      fn(*i);
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::size_t common_neighbours(const UndirectedGraph& g, const Iri& x, const Iri& y) {
  check_pair(g, x, y);
  std::size_t n = 0;
  for_each_common(g, x, y, [&](const Iri&) { ++n; });
  return n;
}

double adamic_adar(const UndirectedGraph& g, const Iri& x, const Iri& y) {
  check_pair(g, x, y);
  double sum = 0.0;
  for_each_common(g, x, y, [&](const Iri& z) {
    // z is adjacent to both x and y, which are distinct.
    std::size_t degree = g.degree(z);
    if (degree < 2) throw std::logic_error("common neighbour with degree < 2");
    sum += 1.0 / std::log(static_cast<double>(degree));
  });
  return sum;
}

std::optional<double> label_similarity(const EmbeddingStore& store,
                                       const std::string& label_x,
                                       const std::string& label_y,
                                       Warnings* warnings) {
  try {
    auto u = embed_label(store, label_x);
    auto v = embed_label(store, label_y);
    return cosine(u.vector, v.vector);
  } catch (const UnembeddableLabel& e) {
    warn(warnings, e.what());
  } catch (const std::invalid_argument& e) {
    warn(warnings, "cannot compare \"" + label_x + "\" and \"" + label_y + "\": " + e.what());
  }
  return std::nullopt;
}

FeatureVector extract_features(const ClassGraph& g, const EmbeddingStore& store,
                               const LabelMap& labels, const Iri& x, const Iri& y,
                               Warnings* warnings) {
  auto label_of = [&](const Iri& c) {
    auto it = labels.find(c);
    return it != labels.end() ? it->second : local_name(c);
  };
  FeatureVector fv;
  fv.cn = common_neighbours(g, x, y);
  fv.aa = adamic_adar(g, x, y);
  fv.glove_sim = label_similarity(store, label_of(x), label_of(y), warnings);
  return fv;
}

void write_feature_dump(std::ostream& out, const std::vector<FeatureRecord>& rows) {
  out << "class_x,class_y,cn,aa,glove_sim,label\n";
  for (const auto& r : rows) {
    out << csv::join({r.class_x, r.class_y, std::to_string(r.features.cn),
                      csv::format_double(r.features.aa),
                      r.features.glove_sim ? csv::format_double(*r.features.glove_sim) : "",
                      r.label ? (*r.label ? "1" : "0") : "?"})
        << '\n';
  }
}

std::vector<FeatureRecord> read_feature_dump(std::istream& in) {
  auto table = csv::read(in);
  std::size_t cx = table.require_column("class_x");
  std::size_t cy = table.require_column("class_y");
  std::size_t ccn = table.require_column("cn");
  std::size_t caa = table.require_column("aa");
  std::size_t cg = table.require_column("glove_sim");
  std::size_t cl = table.require_column("label");

  std::vector<FeatureRecord> rows;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& f = table.rows[r];
    std::size_t line = table.line_numbers[r];
    FeatureRecord rec;
    rec.class_x = f[cx];
    rec.class_y = f[cy];
    double cn = csv::parse_double(f[ccn], line);
    if (cn < 0 || cn != std::floor(cn)) {
      throw ParseError(line, f[ccn], "cn must be a nonnegative integer");
    }
    rec.features.cn = static_cast<std::size_t>(cn);
    rec.features.aa = csv::parse_double(f[caa], line);
    if (rec.features.aa < 0) throw ParseError(line, f[caa], "aa must be nonnegative");
    if (!f[cg].empty()) {
      double sim = csv::parse_double(f[cg], line);
      if (sim < -1.0 || sim > 1.0) throw ParseError(line, f[cg], "glove_sim outside [-1,1]");
      rec.features.glove_sim = sim;
    }
    if (f[cl] == "1") {
      rec.label = true;
    } else if (f[cl] == "0") {
      rec.label = false;
    } else if (f[cl] != "?") {
      throw ParseError(line, f[cl], "label must be 1, 0 or ?");
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

std::vector<FeatureRecord> read_feature_dump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_feature_dump(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace relgap
