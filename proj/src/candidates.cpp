#include "relgap/candidates.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "relgap/csv.hpp"

namespace relgap {
namespace {

std::size_t shared_count(const std::set<Iri>& a, const std::set<Iri>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool by_score_then_name(const ScoredPair& a, const ScoredPair& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.class_x != b.class_x) return a.class_x < b.class_x;
  return a.class_y < b.class_y;
}

std::string label_of(const LabelMap& labels, const Iri& c) {
  auto it = labels.find(c);
  return it != labels.end() ? it->second : local_name(c);
}

}  // namespace

std::vector<NodePair> enumerate_candidates(const Ontology& o, const ClassGraph& g,
                                           const EnumerateOptions& options) {
  const std::size_t n = o.classes.size();
  const std::size_t total = n < 2 ? 0 : (n % 2 == 0 ? (n / 2) * (n - 1) : n * ((n - 1) / 2));
  if (total > options.max_pairs) {
    throw InputError(std::to_string(n) + " classes give " + std::to_string(total) +
                     " pairs, above the --max-pairs limit of " +
                     std::to_string(options.max_pairs));
  }

  std::set<NodePair> taxonomic;
  if (options.exclude_subclass) {
    for (const auto& ax : o.subclass_axioms) {
      if (ax.sub != ax.super) taxonomic.insert(make_pair_sorted(ax.sub, ax.super));
    }
  }

  std::vector<Iri> classes(o.classes.begin(), o.classes.end());
  std::vector<NodePair> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const Iri& x = classes[i];
      const Iri& y = classes[j];
      if (g.has_edge(x, y)) continue;
      if (taxonomic.count({x, y}) != 0) continue;
      out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<CandidatePair> rank_candidates(const SvmModel& model, const ClassGraph& g,
                                           const EmbeddingStore& store,
                                           const LabelMap& labels,
                                           const std::vector<NodePair>& pairs,
                                           Warnings* warnings) {
  std::vector<CandidatePair> ranked;
  for (const auto& [x, y] : pairs) {
    if (g.has_edge(x, y)) {
      throw std::logic_error("candidate <" + x.value + ">,<" + y.value + "> is an existing edge");
    }
    CandidatePair c{x, y, extract_features(g, store, labels, x, y, warnings), 0.0, false};
    auto p = predict(model, c.features);
    if (!p.positive) continue;
    c.margin = p.margin;
    c.positive = true;
    ranked.push_back(std::move(c));
  }
  std::sort(ranked.begin(), ranked.end(), [](const CandidatePair& a, const CandidatePair& b) {
    if (a.margin != b.margin) return a.margin > b.margin;
    if (a.class_x != b.class_x) return a.class_x < b.class_x;
    return a.class_y < b.class_y;
  });
  return ranked;
}

ClassMembers class_members(const Ontology& o) {
  ClassMembers members;
  for (const auto& [individual, types] : o.type_assertions) {
    for (const auto& c : types) members[c].push_back(individual);
  }
  return members;
}

std::optional<ProphetScore> prophet_score(const InstanceGraph& ig, const ClassMembers& members,
                                          const Iri& x, const Iri& y) {
  auto ix = members.find(x);
  auto iy = members.find(y);
  if (ix == members.end() || iy == members.end()) return std::nullopt;

  std::uint64_t shared = 0;
  std::size_t pairs = 0;
  for (const auto& i : ix->second) {
    for (const auto& j : iy->second) {
      if (i == j) continue;
      ++pairs;
      shared += shared_count(ig.neighbours(i), ig.neighbours(j));
    }
  }
  if (pairs == 0) return std::nullopt;
  return ProphetScore{x, y, static_cast<double>(shared) / static_cast<double>(pairs), pairs};
}

std::optional<ProphetScore> prophet_score(const InstanceGraph& ig, const Ontology& o,
                                          const Iri& x, const Iri& y) {
  return prophet_score(ig, class_members(o), x, y);
}

std::vector<ScoredPair> prophet_baseline(const InstanceGraph& ig, const Ontology& o,
                                         const std::vector<NodePair>& pairs,
                                         double threshold) {
  auto members = class_members(o);
  std::vector<ScoredPair> out;
  for (const auto& [x, y] : pairs) {
    auto s = prophet_score(ig, members, x, y);
    if (s && s->score > threshold) out.push_back({x, y, s->score});
  }
  std::sort(out.begin(), out.end(), by_score_then_name);
  return out;
}

std::vector<ScoredPair> wv_baseline(const EmbeddingStore& store, const LabelMap& labels,
                                    const std::vector<NodePair>& pairs, double threshold,
                                    Warnings* warnings) {
  std::vector<ScoredPair> out;
  for (const auto& [x, y] : pairs) {
    auto sim = label_similarity(store, label_of(labels, x), label_of(labels, y), warnings);
    if (sim && *sim > threshold) out.push_back({x, y, *sim});
  }
  std::sort(out.begin(), out.end(), by_score_then_name);
  return out;
}

void write_candidates_csv(std::ostream& out, const std::vector<CandidatePair>& ranked) {
  out << "rank,class_x,class_y,cn,aa,glove_sim,margin\n";
  std::size_t rank = 0;
  for (const auto& c : ranked) {
    out << csv::join({std::to_string(++rank), c.class_x.value, c.class_y.value,
                      std::to_string(c.features.cn), csv::format_double(c.features.aa),
                      c.features.glove_sim ? csv::format_double(*c.features.glove_sim) : "",
                      csv::format_double(c.margin)})
        << '\n';
  }
}

void write_baseline_csv(std::ostream& out, const std::vector<ScoredPair>& ranked) {
  out << "rank,class_x,class_y,score\n";
  if (ranked.empty()) out << "# no results\n";
  std::size_t rank = 0;
  for (const auto& s : ranked) {
    out << csv::join({std::to_string(++rank), s.class_x.value, s.class_y.value,
                      csv::format_double(s.score)})
        << '\n';
  }
}

}  // namespace relgap
