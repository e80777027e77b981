#pragma once

// Relation-gap candidates: unconnected class pairs ranked by the classifier,
// plus the instance-level common-neighbour (Prophet-style) and label-cosine
// baselines.

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relgap/classifier.hpp"
#include "relgap/embeddings.hpp"
#include "relgap/features.hpp"
#include "relgap/graph.hpp"
#include "relgap/ontology.hpp"

namespace relgap {

struct EnumerateOptions {
  bool exclude_subclass = true;
  // Refuse to enumerate when C(n,2) exceeds this.
  std::size_t max_pairs = std::numeric_limits<std::size_t>::max();
};

// All unordered class pairs that are not edges of `g` (and, by default, not
// related by a direct subclass axiom), sorted by (x, y) with x < y.
// Throws InputError when the pair space exceeds options.max_pairs.
std::vector<NodePair> enumerate_candidates(const Ontology& o, const ClassGraph& g,
                                           const EnumerateOptions& options = {});

struct CandidatePair {
  Iri class_x;
  Iri class_y;
  FeatureVector features;
  double margin = 0.0;
  bool positive = false;
};

// Scores every pair and keeps the positive ones, ordered by margin descending
// and then lexicographically.
std::vector<CandidatePair> rank_candidates(const SvmModel& model, const ClassGraph& g,
                                           const EmbeddingStore& store,
                                           const LabelMap& labels,
                                           const std::vector<NodePair>& pairs,
                                           Warnings* warnings = nullptr);

struct ProphetScore {
  Iri class_x;
  Iri class_y;
  double score = 0.0;
  std::size_t instance_pairs = 0;
};

// class -> individuals typed with it.
using ClassMembers = std::map<Iri, std::vector<Iri>>;
ClassMembers class_members(const Ontology& o);

// Mean |adj(i) ∩ adj(j)| over ordered instance pairs i in x, j in y, i != j.
// nullopt when there is no such pair.
std::optional<ProphetScore> prophet_score(const InstanceGraph& ig, const ClassMembers& members,
                                          const Iri& x, const Iri& y);
std::optional<ProphetScore> prophet_score(const InstanceGraph& ig, const Ontology& o,
                                          const Iri& x, const Iri& y);

struct ScoredPair {
  Iri class_x;
  Iri class_y;
  double score = 0.0;
};

inline constexpr double kProphetThreshold = 10.0;

// Pairs whose score is strictly above `threshold`, best first.
std::vector<ScoredPair> prophet_baseline(const InstanceGraph& ig, const Ontology& o,
                                         const std::vector<NodePair>& pairs,
                                         double threshold = kProphetThreshold);

// Pairs whose label-embedding cosine is strictly above `threshold`, best
// first. Unembeddable pairs are skipped with a warning.
std::vector<ScoredPair> wv_baseline(const EmbeddingStore& store, const LabelMap& labels,
                                    const std::vector<NodePair>& pairs, double threshold,
                                    Warnings* warnings = nullptr);

// rank,class_x,class_y,cn,aa,glove_sim,margin
void write_candidates_csv(std::ostream& out, const std::vector<CandidatePair>& ranked);
// rank,class_x,class_y,score; an empty result adds a "# no results" line.
void write_baseline_csv(std::ostream& out, const std::vector<ScoredPair>& ranked);

}  // namespace relgap
