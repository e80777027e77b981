#pragma once

// Pre-trained word vectors in GloVe text format and label-level embeddings.

#include <cstddef>
#include <functional>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relgap/error.hpp"

namespace relgap {

class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  explicit EmbeddingStore(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

  // Token is lowercased; vector must match the store's dimension.
  void insert(std::string_view token, std::vector<double> vector);

  // nullptr when the (lowercase) token is out of vocabulary.
  const std::vector<double>* find(std::string_view token) const;

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Restricts which tokens are kept in memory. Every line is still validated.
using TokenFilter = std::function<bool(std::string_view)>;

// One entry per line: token followed by whitespace-separated decimals.
// Dimension comes from the first line; duplicate tokens keep the last vector.
// Throws ParseError on inconsistent dimension, InputError on empty input.
EmbeddingStore load_glove(std::istream& in, const TokenFilter& keep = {});
EmbeddingStore load_glove(const std::string& path, const TokenFilter& keep = {});

// Splits on '_', '-', '+', whitespace and lower-to-upper case boundaries,
// then lowercases.
std::vector<std::string> tokenize_label(std::string_view label);

struct LabelVector {
  std::vector<double> vector;
  std::size_t covered_tokens = 0;
  std::size_t total_tokens = 0;
};

class UnembeddableLabel : public std::runtime_error {
 public:
  explicit UnembeddableLabel(std::string label)
      : std::runtime_error("unembeddable label \"" + label + "\""),
        label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// Mean of the in-vocabulary token vectors. Throws UnembeddableLabel when no
// token is covered.
LabelVector embed_label(const EmbeddingStore& store, std::string_view label);

// u.v / (|u||v|) clamped to [-1, 1]. Throws std::invalid_argument on
// dimension mismatch or a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

}  // namespace relgap
