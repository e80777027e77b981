#pragma once

// Runs the relgap executable and synthesizes pipeline-sized inputs.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "support.hpp"

namespace relgap::testing {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

class Workspace {
 public:
  explicit Workspace(const std::string& tag)
      : dir_(std::filesystem::temp_directory_path() /
             ("relgap_" + tag + "_" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~Workspace() { std::filesystem::remove_all(dir_); }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  RunResult run(const std::string& cli, const std::vector<std::string>& args) const {
    std::string cmd = shell_quote(cli);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    std::string out = path(".stdout"), err = path(".stderr");
    cmd += " > " + shell_quote(out) + " 2> " + shell_quote(err);
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
  }

 private:
  std::filesystem::path dir_;
};

inline std::string synthetic_word(std::size_t k) { return "tok" + std::to_string(k); }

// Classes labeled with two vocabulary words, `n_edges` domain/range
// properties, and typed individuals linked by relation assertions.
inline std::string synthetic_ontology(std::uint64_t seed, std::size_t n_classes,
                                      std::size_t n_edges, std::size_t n_individuals,
                                      std::size_t n_words) {
  Rng rng(seed);
  NtBuilder b;
  for (std::size_t c = 0; c < n_classes; ++c) {
    std::string name = "Class" + std::to_string(c);
    b.cls(name).label(name, synthetic_word(rng.below(n_words)) + "_" +
                                synthetic_word(rng.below(n_words)));
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  while (edges.size() < n_edges) {
    std::size_t a = rng.below(n_classes), c = rng.below(n_classes);
    if (a == c) continue;
    if (edges.emplace(std::min(a, c), std::max(a, c)).second) {
      b.prop("rel" + std::to_string(edges.size()), "Class" + std::to_string(a),
             "Class" + std::to_string(c));
    }
  }
  b.prop("linkedTo");
  for (std::size_t i = 0; i < n_individuals; ++i) {
    b.ind("ind" + std::to_string(i), "Class" + std::to_string(rng.below(n_classes)));
  }
  for (std::size_t r = 0; r < 2 * n_individuals; ++r) {
    b.rel("ind" + std::to_string(rng.below(n_individuals)), "linkedTo",
          "ind" + std::to_string(rng.below(n_individuals)));
  }
  return b.str();
}

// GloVe-format text: the vocabulary words plus `fillers` unrelated rows.
inline std::string synthetic_glove(std::uint64_t seed, std::size_t n_words, std::size_t dim,
                                   std::size_t fillers) {
  Rng rng(seed);
  std::string text;
  char buf[32];
  auto row = [&](const std::string& token) {
    text += token;
    for (std::size_t d = 0; d < dim; ++d) {
      std::snprintf(buf, sizeof(buf), " %.5f", rng.uniform(-1, 1));
      text += buf;
    }
    text += '\n';
  };
  for (std::size_t k = 0; k < n_words; ++k) row(synthetic_word(k));
  for (std::size_t k = 0; k < fillers; ++k) row("filler" + std::to_string(k));
  return text;
}

// Training pairs over the synthetic ontology's class labels.
inline std::string synthetic_training_pairs(std::uint64_t seed, std::size_t n_classes,
                                            std::size_t n_pos, std::size_t n_neg) {
  Rng rng(seed);
  std::string text = "class_x,class_y,label\n";
  for (std::size_t i = 0; i < n_pos + n_neg; ++i) {
    std::size_t a = rng.below(n_classes), c = rng.below(n_classes);
    if (a == c) c = (c + 1) % n_classes;
    text += "http://t/Class" + std::to_string(a) + ",http://t/Class" + std::to_string(c) + "," +
            (i < n_pos ? "1" : "0") + "\n";
  }
  return text;
}

}  // namespace relgap::testing
