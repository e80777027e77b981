#pragma once

// Class-pair features: common neighbours, Adamic-Adar index and the cosine
// similarity of the two class-label embeddings.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relgap/embeddings.hpp"
#include "relgap/graph.hpp"

namespace relgap {

struct FeatureVector {
  std::size_t cn = 0;
  double aa = 0.0;
  std::optional<double> glove_sim;  // nullopt when a label was unembeddable

  bool operator==(const FeatureVector&) const = default;
};

using LabelMap = std::map<Iri, std::string>;

// |adj(x) ∩ adj(y)|. Throws InputError for unknown nodes or x == y.
std::size_t common_neighbours(const UndirectedGraph& g, const Iri& x, const Iri& y);

// Sum of 1/ln|adj(z)| over common neighbours z.
double adamic_adar(const UndirectedGraph& g, const Iri& x, const Iri& y);

// Cosine of the two label embeddings, or nullopt (with a warning) when either
// label has no in-vocabulary token.
std::optional<double> label_similarity(const EmbeddingStore& store,
                                       const std::string& label_x,
                                       const std::string& label_y,
                                       Warnings* warnings = nullptr);

FeatureVector extract_features(const ClassGraph& g, const EmbeddingStore& store,
                               const LabelMap& labels, const Iri& x, const Iri& y,
                               Warnings* warnings = nullptr);

// Feature dump CSV: class_x,class_y,cn,aa,glove_sim,label with label in
// {1,0,?} and an empty glove_sim field for a missing similarity.
struct FeatureRecord {
  std::string class_x;
  std::string class_y;
  FeatureVector features;
  std::optional<bool> label;  // nullopt is '?'

  bool operator==(const FeatureRecord&) const = default;
};

void write_feature_dump(std::ostream& out, const std::vector<FeatureRecord>& rows);
std::vector<FeatureRecord> read_feature_dump(std::istream& in);
std::vector<FeatureRecord> read_feature_dump_file(const std::string& path);

}  // namespace relgap
