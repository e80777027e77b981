#include "relgap/eval.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "relgap/csv.hpp"
#include "relgap/error.hpp"

namespace relgap {

NamePair make_name_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

JudgmentSet read_judgments(std::istream& in) {
  auto table = csv::read(in);
  std::size_t cx = table.require_column("class_x");
  std::size_t cy = table.require_column("class_y");
  std::size_t cv = table.require_column("verdict");
  JudgmentSet set;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& f = table.rows[r];
    std::size_t line = table.line_numbers[r];
    bool verdict = false;
    if (f[cv] == "correct") {
      verdict = true;
    } else if (f[cv] != "incorrect") {
      throw ParseError(line, f[cv], "verdict must be 'correct' or 'incorrect'");
    }
    if (!set.correct.emplace(make_name_pair(f[cx], f[cy]), verdict).second) {
      throw ParseError(line, f[cx] + "," + f[cy], "pair judged more than once");
    }
  }
  return set;
}

JudgmentSet read_judgments_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_judgments(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<NamePair> read_predicted_pairs(std::istream& in) {
  auto table = csv::read(in);
  std::size_t cx = table.require_column("class_x");
  std::size_t cy = table.require_column("class_y");
  std::vector<NamePair> pairs;
  pairs.reserve(table.rows.size());
  for (const auto& f : table.rows) pairs.push_back(make_name_pair(f[cx], f[cy]));
  return pairs;
}

std::vector<NamePair> read_predicted_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_predicted_pairs(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

SystemReport precision(const std::vector<NamePair>& predicted, const JudgmentSet& judgments) {
  SystemReport report;
  std::vector<std::string> unjudged;
  for (const auto& p : predicted) {
    auto key = make_name_pair(p.first, p.second);
    auto it = judgments.correct.find(key);
    if (it == judgments.correct.end()) {
      unjudged.push_back("(" + key.first + ", " + key.second + ")");
      continue;
    }
    ++report.produced;
    if (it->second) ++report.correct;
  }
  if (!unjudged.empty()) {
    std::string msg = std::to_string(unjudged.size()) + " predicted pair(s) have no judgment:";
    for (const auto& u : unjudged) msg += "\n  " + u;
    throw EvalError(msg);
  }
  if (report.produced > 0) {
    report.precision =
        static_cast<double>(report.correct) / static_cast<double>(report.produced);
  }
  return report;
}

std::string format_precision(const std::optional<double>& precision) {
  if (!precision) return "no results";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *precision);
  return buf;
}

std::string compare_report(const std::vector<SystemReport>& reports) {
  std::ostringstream out;
  out << "dataset,system,produced,correct,precision,elapsed_seconds\n";
  for (const auto& r : reports) {
    std::string elapsed;
    if (r.elapsed_seconds) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", *r.elapsed_seconds);
      elapsed = buf;
    }
    out << csv::join({r.dataset, r.system, std::to_string(r.produced),
                      std::to_string(r.correct), format_precision(r.precision), elapsed})
        << '\n';
  }
  return out.str();
}

}  // namespace relgap
