#pragma once

// Undirected simple graphs over IRIs: the class-level graph induced by
// domain/range axioms and the instance-level graph induced by relation
// assertions.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "relgap/ontology.hpp"

namespace relgap {

// Unordered pair stored with first < second.
using NodePair = std::pair<Iri, Iri>;

NodePair make_pair_sorted(Iri a, Iri b);

class UndirectedGraph {
 public:
  void add_node(const Iri& node);
  // Adds {a, b}, inserting both endpoints. Self-loops are dropped.
  void add_edge(const Iri& a, const Iri& b);
  void remove_edge(const Iri& a, const Iri& b);

  bool contains(const Iri& node) const { return adjacency_.count(node) != 0; }
  bool has_edge(const Iri& a, const Iri& b) const;

  // Throws InputError naming the node when it is not in the graph.
  const std::set<Iri>& neighbours(const Iri& node) const;
  std::size_t degree(const Iri& node) const { return neighbours(node).size(); }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

  const std::map<Iri, std::set<Iri>>& adjacency() const { return adjacency_; }

  bool operator==(const UndirectedGraph&) const = default;

 private:
  std::map<Iri, std::set<Iri>> adjacency_;
};

class ClassGraph : public UndirectedGraph {};
class InstanceGraph : public UndirectedGraph {};

ClassGraph build_class_graph(const Ontology& o);
InstanceGraph build_instance_graph(const Ontology& o);

std::set<NodePair> connected_class_pairs(const ClassGraph& g);

// Debug dump: one `A<TAB>B` line per edge, A < B, sorted.
void write_edge_list(std::ostream& out, const UndirectedGraph& g);

}  // namespace relgap
