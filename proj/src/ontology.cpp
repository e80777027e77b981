#include "relgap/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace relgap {
namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  Triple parse() {
    Triple t;
    skip_space();
    t.subject = iri("subject");
    require_space();
    t.predicate = iri("predicate");
    require_space();
    if (peek() == '"') {
      t.object = literal();
    } else {
      t.object = iri("object");
    }
    skip_space();
    if (peek() != '.') fail("expected '.' terminating the triple");
    ++pos_;
    skip_space();
    if (pos_ != line_.size()) fail("trailing text after '.'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_no_, std::string(line_), what);
  }

  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  void require_space() {
    std::size_t before = pos_;
    skip_space();
    if (pos_ == before) fail("expected whitespace between terms");
  }

  Iri iri(const char* role) {
    if (peek() != '<') fail(std::string("expected IRI as ") + role);
    std::size_t start = ++pos_;
    while (pos_ < line_.size() && line_[pos_] != '>') {
      char c = line_[pos_];
      if (c == ' ' || c == '\t' || c == '<' || c == '"') {
        fail(std::string("invalid character in ") + role + " IRI");
      }
      ++pos_;
    }
    if (pos_ >= line_.size()) fail(std::string("unterminated ") + role + " IRI");
    std::string value(line_.substr(start, pos_ - start));
    ++pos_;
    if (!has_scheme(value)) fail(std::string(role) + " IRI is not absolute");
    return Iri{std::move(value)};
  }

  static bool has_scheme(std::string_view v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      char c = v[i];
      if (c == ':') return i + 1 < v.size();
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
          c != '.') {
        return false;
      }
    }
    return false;
  }

  Literal literal() {
    Literal lit;
    ++pos_;  // opening quote
    while (true) {
      if (pos_ >= line_.size()) fail("unterminated literal");
      char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lit.lexical += c;
        continue;
      }
      if (pos_ >= line_.size()) fail("dangling escape in literal");
      char e = line_[pos_++];
      switch (e) {
        case 't': lit.lexical += '\t'; break;
        case 'b': lit.lexical += '\b'; break;
        case 'n': lit.lexical += '\n'; break;
        case 'r': lit.lexical += '\r'; break;
        case 'f': lit.lexical += '\f'; break;
        case '"': lit.lexical += '"'; break;
        case '\'': lit.lexical += '\''; break;
        case '\\': lit.lexical += '\\'; break;
        case 'u': append_utf8(lit.lexical, hex(4)); break;
        case 'U': append_utf8(lit.lexical, hex(8)); break;
        default: fail("unknown escape in literal");
      }
    }
    if (peek() == '@') {
      std::size_t start = pos_++;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start + 1) fail("empty language tag");
      lit.tag = std::string(line_.substr(start, pos_ - start));
    } else if (peek() == '^') {
      if (line_.substr(pos_, 2) != "^^") fail("malformed datatype marker");
      pos_ += 2;
      Iri dt = iri("datatype");
      lit.tag = "^^<" + dt.value + ">";
    }
    return lit;
  }

  char32_t hex(int digits) {
    if (pos_ + digits > line_.size()) fail("truncated unicode escape");
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char c = line_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= c - '0';
      else if (c >= 'a' && c <= 'f') cp |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') cp |= c - 'A' + 10;
      else fail("bad hex digit in unicode escape");
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point");
    return cp;
  }

  static void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::string escape_literal(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

bool is(const Iri& iri, std::string_view term) { return iri.value == term; }

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    triples.push_back(LineParser(line, line_no).parse());
  }
  return triples;
}

std::vector<Triple> parse_ntriples_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ntriples(buf.str());
}

std::string serialize_ntriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const auto& t : triples) {
    out += '<' + t.subject.value + "> <" + t.predicate.value + "> ";
    if (const auto* iri = std::get_if<Iri>(&t.object)) {
      out += '<' + iri->value + '>';
    } else {
      const auto& lit = std::get<Literal>(t.object);
      out += '"' + escape_literal(lit.lexical) + '"' + lit.tag;
    }
    out += " .\n";
  }
  return out;
}

std::string local_name(const Iri& iri) {
  const std::string& v = iri.value;
  std::size_t cut = v.find_last_of("#/");
  if (cut == std::string::npos || cut + 1 == v.size()) return v;
  return v.substr(cut + 1);
}

std::string Ontology::display_label(const Iri& iri) const {
  if (auto it = labels.find(iri); it != labels.end()) return it->second;
  return local_name(iri);
}

Ontology build_ontology(const std::vector<Triple>& triples, Warnings* warnings) {
  Ontology o;

  // Pass 1: declarations, so later classification is independent of order.
  for (const auto& t : triples) {
    const auto* obj = std::get_if<Iri>(&t.object);
    if (is(t.predicate, vocab::kRdfType) && obj != nullptr) {
      if (is(*obj, vocab::kOwlClass)) o.classes.insert(t.subject);
      if (is(*obj, vocab::kOwlObjectProperty)) o.object_properties[t.subject];
    } else if (is(t.predicate, vocab::kRdfsSubClassOf) && obj != nullptr) {
      o.classes.insert(t.subject);
      o.classes.insert(*obj);
    }
  }

  // Pass 2: domain/range, which may introduce further classes.
  for (const auto& t : triples) {
    bool is_domain = is(t.predicate, vocab::kRdfsDomain);
    if (!is_domain && !is(t.predicate, vocab::kRdfsRange)) continue;
    const char* axiom = is_domain ? "domain" : "range";
    const auto* cls = std::get_if<Iri>(&t.object);
    if (cls == nullptr) {
      warn(warnings, std::string("ignoring literal rdfs:") + axiom + " on <" +
                         t.subject.value + ">");
      continue;
    }
    auto declared = o.object_properties.find(t.subject);
    PropertySignature* sig = nullptr;
    if (declared != o.object_properties.end()) {
      sig = &declared->second;
      o.classes.insert(*cls);
    } else {
      warn(warnings, std::string("rdfs:") + axiom + " on <" + t.subject.value +
                         "> which is not a declared object property");
      sig = &o.undeclared_property_axioms[t.subject];
    }
    std::optional<Iri>& slot = is_domain ? sig->domain : sig->range;
    if (!slot) {
      slot = *cls;
    } else if (*slot != *cls) {
      warn(warnings, std::string("conflicting rdfs:") + axiom + " for <" +
                         t.subject.value + ">: keeping <" + slot->value +
                         ">, ignoring <" + cls->value + ">");
    }
  }

  // Pass 3: typing.
  for (const auto& t : triples) {
    const auto* obj = std::get_if<Iri>(&t.object);
    if (obj == nullptr || !is(t.predicate, vocab::kRdfType)) continue;
    if (o.classes.count(*obj) != 0) {
      o.individuals.insert(t.subject);
      o.type_assertions[t.subject].insert(*obj);
    }
  }

  // Pass 4: subclass axioms, labels and relation assertions.
  for (const auto& t : triples) {
    if (const auto* obj = std::get_if<Iri>(&t.object)) {
      if (is(t.predicate, vocab::kRdfsSubClassOf)) {
        o.subclass_axioms.insert({t.subject, *obj});
      } else if (o.object_properties.count(t.predicate) != 0 &&
                 o.individuals.count(t.subject) != 0 &&
                 o.individuals.count(*obj) != 0) {
        o.relation_assertions.insert({t.subject, t.predicate, *obj});
      }
    } else if (is(t.predicate, vocab::kRdfsLabel)) {
      const auto& text = std::get<Literal>(t.object).lexical;
      auto [it, inserted] = o.labels.emplace(t.subject, text);
      if (!inserted && it->second != text) {
        warn(warnings, "multiple rdfs:label values for <" + t.subject.value +
                           ">: keeping \"" + it->second + "\"");
      }
    }
  }

  for (const auto& c : o.classes) o.labels.emplace(c, local_name(c));
  return o;
}

Ontology load_ontology(const std::string& path, Warnings* warnings) {
  return build_ontology(parse_ntriples_file(path), warnings);
}

OntologySummary summarize(const Ontology& o) {
  OntologySummary s;
  s.n_classes = o.classes.size();
  s.n_individuals = o.individuals.size();
  s.n_object_properties = o.object_properties.size();
  s.n_op_without_domain_range = static_cast<std::size_t>(
      std::count_if(o.object_properties.begin(), o.object_properties.end(),
                    [](const auto& kv) { return !kv.second.domain || !kv.second.range; }));
  return s;
}

}  // namespace relgap
