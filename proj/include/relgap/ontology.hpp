#pragma once

// Ontology ingestion from a strict N-Triples subset.
//
// Accepted lines:
//   <subject> <predicate> <object> .
//   <subject> <predicate> "literal" .          (optionally @lang or ^^<datatype>)
// Blank lines and lines starting with '#' are skipped. No prefixes, no blank
// nodes.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "relgap/error.hpp"

namespace relgap {

struct Iri {
  std::string value;

  auto operator<=>(const Iri&) const = default;
};

struct Literal {
  std::string lexical;
  std::string tag;  // "@en", "^^<http://...>", or empty

  auto operator<=>(const Literal&) const = default;
};

struct Triple {
  Iri subject;
  Iri predicate;
  std::variant<Iri, Literal> object;

  bool operator==(const Triple&) const = default;
};

namespace vocab {
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kOwlObjectProperty =
    "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kRdfsDomain =
    "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRdfsRange =
    "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view kRdfsSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
}  // namespace vocab

// Throws ParseError with the 1-based line number of the first malformed line.
std::vector<Triple> parse_ntriples(std::string_view text);
std::vector<Triple> parse_ntriples_file(const std::string& path);

// Canonical writer: one `<s> <p> <o> .` per line, single spaces.
std::string serialize_ntriples(const std::vector<Triple>& triples);

struct PropertySignature {
  std::optional<Iri> domain;
  std::optional<Iri> range;

  bool operator==(const PropertySignature&) const = default;
};

struct RelationAssertion {
  Iri subject;
  Iri property;
  Iri object;

  auto operator<=>(const RelationAssertion&) const = default;
};

struct SubclassAxiom {
  Iri sub;
  Iri super;

  auto operator<=>(const SubclassAxiom&) const = default;
};

struct Ontology {
  std::set<Iri> classes;
  std::map<Iri, PropertySignature> object_properties;
  std::set<Iri> individuals;
  std::map<Iri, std::set<Iri>> type_assertions;
  std::set<RelationAssertion> relation_assertions;
  std::set<SubclassAxiom> subclass_axioms;
  // Display label of every class (rdfs:label, else the IRI local name), plus
  // explicit rdfs:label values of any other resource.
  std::map<Iri, std::string> labels;
  // Domain/range axioms attached to IRIs never declared owl:ObjectProperty.
  // Kept for inspection; they do not contribute classes or graph edges.
  std::map<Iri, PropertySignature> undeclared_property_axioms;

  bool operator==(const Ontology&) const = default;

  // rdfs:label if present, otherwise the local name.
  std::string display_label(const Iri& iri) const;
};

// Text after the last '#' or '/', or the whole IRI when that is empty.
std::string local_name(const Iri& iri);

Ontology build_ontology(const std::vector<Triple>& triples,
                        Warnings* warnings = nullptr);

Ontology load_ontology(const std::string& path, Warnings* warnings = nullptr);

struct OntologySummary {
  std::size_t n_classes = 0;
  std::size_t n_individuals = 0;
  std::size_t n_object_properties = 0;
  std::size_t n_op_without_domain_range = 0;

  bool operator==(const OntologySummary&) const = default;
};

OntologySummary summarize(const Ontology& o);

}  // namespace relgap
