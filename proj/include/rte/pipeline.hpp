#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rte/dl.hpp"
#include "rte/lexicon.hpp"
#include "rte/semgraph.hpp"
#include "rte/sentence.hpp"

namespace rte::pipeline {

struct RteOptions {
  std::vector<lexicon::LexRelation> lexicon;
  std::set<dl::Gci> background;  // extra T-Box axioms, used as-is
  semgraph::MatchOptions match;
};

struct RteResult {
  bool entailed = false;
  std::optional<semgraph::MatchWitness> witness;
  std::set<dl::Gci> tbox;  // the per-pair T-Box actually used
  semgraph::SemGraph text_graph;
  semgraph::SemGraph hyp_graph;
};

// End-to-end check: parse both sentences, build the Davidsonian A-Boxes,
// compile the pair-relevant T-Box, saturate, and run subgraph detection.
// True means the text entails the hypothesis.
RteResult rte_check(const std::string& text_sentence,
                    const std::string& hyp_sentence,
                    const sentence::WordList& words, const RteOptions& opts);

struct CorpusPair {
  std::string id;
  std::string text;
  std::string hypothesis;
  bool gold = false;
};

// `id<TAB>text<TAB>hypothesis<TAB>true|false`, `#` comments, UTF-8.
std::vector<CorpusPair> load_corpus(std::istream& in);
std::vector<CorpusPair> load_corpus_file(const std::string& path);

struct EvalReport {
  int tp = 0, fp = 0, fn = 0, tn = 0;
  std::vector<std::pair<std::string, std::string>> skipped;  // id, reason
  struct PairResult {
    std::string id;
    bool predicted;
    bool gold;
  };
  std::vector<PairResult> pairs;
};

// Runs rte_check on every pair; pairs the front end cannot handle are
// counted under skipped with the reason and excluded from the matrix.
EvalReport evaluate(const std::vector<CorpusPair>& corpus,
                    const sentence::WordList& words, const RteOptions& opts,
                    unsigned jobs = 1);

std::string report_json(const EvalReport& report);
std::string report_tsv(const EvalReport& report);

}  // namespace rte::pipeline
