#include "relgap/graph.hpp"

#include <ostream>

namespace relgap {

NodePair make_pair_sorted(Iri a, Iri b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

void UndirectedGraph::add_node(const Iri& node) { adjacency_[node]; }

void UndirectedGraph::add_edge(const Iri& a, const Iri& b) {
  auto& adj_a = adjacency_[a];
  auto& adj_b = adjacency_[b];
  if (a == b) return;
  adj_a.insert(b);
  adj_b.insert(a);
}

void UndirectedGraph::remove_edge(const Iri& a, const Iri& b) {
  if (auto it = adjacency_.find(a); it != adjacency_.end()) it->second.erase(b);
  if (auto it = adjacency_.find(b); it != adjacency_.end()) it->second.erase(a);
}

bool UndirectedGraph::has_edge(const Iri& a, const Iri& b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.count(b) != 0;
}

const std::set<Iri>& UndirectedGraph::neighbours(const Iri& node) const {
  auto it = adjacency_.find(node);
  if (it == adjacency_.end()) {
    throw InputError("unknown node <" + node.value + ">");
  }
  return it->second;
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [node, adj] : adjacency_) twice += adj.size();
  return twice / 2;
}

ClassGraph build_class_graph(const Ontology& o) {
  ClassGraph g;
  for (const auto& c : o.classes) g.add_node(c);
  for (const auto& [property, sig] : o.object_properties) {
    if (sig.domain && sig.range && *sig.domain != *sig.range) {
      g.add_edge(*sig.domain, *sig.range);
    }
  }
  return g;
}

InstanceGraph build_instance_graph(const Ontology& o) {
  InstanceGraph g;
  for (const auto& i : o.individuals) g.add_node(i);
  for (const auto& r : o.relation_assertions) {
    if (r.subject != r.object) g.add_edge(r.subject, r.object);
  }
  return g;
}

std::set<NodePair> connected_class_pairs(const ClassGraph& g) {
  std::set<NodePair> pairs;
  for (const auto& [node, adj] : g.adjacency()) {
    for (const auto& other : adj) {
      if (node < other) pairs.emplace(node, other);
    }
  }
  return pairs;
}

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
  for (const auto& [node, adj] : g.adjacency()) {
    for (const auto& other : adj) {
      if (node < other) out << node.value << '\t' << other.value << '\n';
    }
  }
}

}  // namespace relgap
