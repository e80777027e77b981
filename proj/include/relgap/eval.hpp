#pragma once

// Precision against consolidated human judgments and comparison tables.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relgap {

// Unordered pair of class names, stored sorted.
using NamePair = std::pair<std::string, std::string>;
NamePair make_name_pair(std::string a, std::string b);

struct JudgmentSet {
  std::map<NamePair, bool> correct;  // pair -> judged correct
};

// CSV with header class_x,class_y,verdict and verdict in {correct,incorrect}.
// A pair judged twice (in either order) is a ParseError.
JudgmentSet read_judgments(std::istream& in);
JudgmentSet read_judgments_file(const std::string& path);

// Pairs from a ranked output CSV (any file with class_x and class_y columns).
std::vector<NamePair> read_predicted_pairs(std::istream& in);
std::vector<NamePair> read_predicted_pairs_file(const std::string& path);

struct SystemReport {
  std::string dataset;
  std::string system;
  std::size_t produced = 0;
  std::size_t correct = 0;
  std::optional<double> precision;  // nullopt: "no results"
  std::optional<double> elapsed_seconds;
};

// Throws EvalError listing every predicted pair missing from `judgments`.
SystemReport precision(const std::vector<NamePair>& predicted, const JudgmentSet& judgments);

// "0.94"-style two-decimal rendering, or "no results".
std::string format_precision(const std::optional<double>& precision);

// dataset,system,produced,correct,precision,elapsed_seconds
std::string compare_report(const std::vector<SystemReport>& reports);

}  // namespace relgap
