#include "relgap/embeddings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace relgap {
namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

void EmbeddingStore::insert(std::string_view token, std::vector<double> vector) {
  if (token.empty()) throw std::invalid_argument("empty embedding token");
  if (vector.size() != dimension_) {
    throw std::invalid_argument("embedding dimension mismatch for token '" +
                                std::string(token) + "'");
  }
  vectors_[lowercase(token)] = std::move(vector);
}

const std::vector<double>* EmbeddingStore::find(std::string_view token) const {
  auto it = vectors_.find(lowercase(token));
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingStore load_glove(std::istream& in, const TokenFilter& keep) {
  EmbeddingStore store;
  bool first = true;
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    while (!rest.empty() && is_space(rest.back())) rest.remove_suffix(1);
    if (rest.empty()) continue;
    std::size_t cut = rest.find_first_of(" \t");
    if (cut == std::string_view::npos) {
      throw ParseError(line_no, line, "token without vector");
    }
    std::string_view token = rest.substr(0, cut);
    rest.remove_prefix(cut);

    values.clear();
    const char* p = rest.data();
    const char* end = rest.data() + rest.size();
    while (p < end) {
      while (p < end && is_space(*p)) ++p;
      if (p == end) break;
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (next < end && !is_space(*next))) {
        throw ParseError(line_no, line, "malformed vector component");
      }
      values.push_back(v);
      p = next;
    }

    if (first) {
      store = EmbeddingStore(values.size());
      first = false;
    } else if (values.size() != store.dimension()) {
      throw ParseError(line_no, line,
                       "expected " + std::to_string(store.dimension()) +
                           " components, got " + std::to_string(values.size()));
    }
    if (!keep || keep(lowercase(token))) store.insert(token, values);
  }
  if (first) throw InputError("embedding file is empty");
  return store;
}

EmbeddingStore load_glove(const std::string& path, const TokenFilter& keep) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return load_glove(in, keep);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> tokenize_label(std::string_view label) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(lowercase(current));
    current.clear();
  };
  char prev = '\0';
  for (char c : label) {
    auto uc = static_cast<unsigned char>(c);
    if (c == '_' || c == '-' || c == '+' || std::isspace(uc)) {
      flush();
    } else {
      if (std::isupper(uc) && std::islower(static_cast<unsigned char>(prev))) flush();
      current += c;
    }
    prev = c;
  }
  flush();
  return tokens;
}

LabelVector embed_label(const EmbeddingStore& store, std::string_view label) {
  LabelVector out;
  out.vector.assign(store.dimension(), 0.0);
  for (const auto& token : tokenize_label(label)) {
    ++out.total_tokens;
    const auto* v = store.find(token);
    if (v == nullptr) continue;
    ++out.covered_tokens;
    for (std::size_t i = 0; i < v->size(); ++i) out.vector[i] += (*v)[i];
  }
  if (out.covered_tokens == 0) throw UnembeddableLabel(std::string(label));
  for (double& x : out.vector) x /= static_cast<double>(out.covered_tokens);
  return out;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine: dimension mismatch");
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) throw std::invalid_argument("cosine: zero vector");
  double c = dot / std::sqrt(uu * vv);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace relgap
