#pragma once

// Builds small N-Triples documents for tests.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include "relgap/ontology.hpp"

namespace relgap::testing {

inline const std::string kNs = "http://t/";

inline std::string iri(const std::string& local) { return "<" + kNs + local + ">"; }
inline Iri I(const std::string& local) { return Iri{kNs + local}; }

class NtBuilder {
 public:
  NtBuilder& cls(const std::string& c) {
    return line(iri(c), type(), "<" + std::string(vocab::kOwlClass) + ">");
  }
  NtBuilder& prop(const std::string& p, std::optional<std::string> domain = std::nullopt,
                  std::optional<std::string> range = std::nullopt) {
    line(iri(p), type(), "<" + std::string(vocab::kOwlObjectProperty) + ">");
    if (domain) line(iri(p), "<" + std::string(vocab::kRdfsDomain) + ">", iri(*domain));
    if (range) line(iri(p), "<" + std::string(vocab::kRdfsRange) + ">", iri(*range));
    return *this;
  }
  NtBuilder& ind(const std::string& i, const std::string& c) { return line(iri(i), type(), iri(c)); }
  NtBuilder& rel(const std::string& s, const std::string& p, const std::string& o) {
    return line(iri(s), iri(p), iri(o));
  }
  NtBuilder& sub(const std::string& sub, const std::string& super) {
    return line(iri(sub), "<" + std::string(vocab::kRdfsSubClassOf) + ">", iri(super));
  }
  NtBuilder& label(const std::string& x, const std::string& text) {
    return line(iri(x), "<" + std::string(vocab::kRdfsLabel) + ">", "\"" + text + "\"@en");
  }
  NtBuilder& raw(const std::string& text) {
    doc_ += text;
    return *this;
  }

  const std::string& str() const { return doc_; }
  Ontology build(Warnings* w = nullptr) const { return build_ontology(parse_ntriples(doc_), w); }

 private:
  static std::string type() { return "<" + std::string(vocab::kRdfType) + ">"; }
  NtBuilder& line(const std::string& s, const std::string& p, const std::string& o) {
    doc_ += s + " " + p + " " + o + " .\n";
    return *this;
  }
  std::string doc_;
};

// 17 classes, 12 individuals, 5 object properties none of which has a domain
// or range.
inline NtBuilder hp_like_fixture() {
  NtBuilder b;
  for (int c = 0; c < 17; ++c) b.cls("C" + std::to_string(c));
  for (int p = 0; p < 5; ++p) b.prop("p" + std::to_string(p));
  for (int i = 0; i < 12; ++i) b.ind("i" + std::to_string(i), "C" + std::to_string(i % 17));
  b.rel("i0", "p0", "i1").rel("i2", "p1", "i3");
  return b;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace relgap::testing
