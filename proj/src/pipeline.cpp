#include "rte/pipeline.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rte/saturation.hpp"

namespace rte::pipeline {

namespace {

std::set<dl::Assertion> sentence_abox(const std::string& text,
                                      const sentence::WordList& words,
                                      const char* which) {
  try {
    return sentence::build_abox(sentence::parse_controlled(text, words));
  } catch (const sentence::ParseError& e) {
    throw sentence::ParseError(e.position,
                               e.expected + " in " + which + " sentence");
  }
}

std::set<std::string> vocabulary(const std::set<dl::Assertion>& abox) {
  dl::KnowledgeBase kb;
  kb.abox = abox;
  return dl::signature(kb).concepts;
}

}  // namespace

RteResult rte_check(const std::string& text_sentence,
                    const std::string& hyp_sentence,
                    const sentence::WordList& words, const RteOptions& opts) {
  auto abox_t = sentence_abox(text_sentence, words, "text");
  auto abox_h = sentence_abox(hyp_sentence, words, "hypothesis");

  RteResult result;
  result.tbox =
      lexicon::relevant_tbox(opts.lexicon, vocabulary(abox_t), vocabulary(abox_h));
  result.tbox.insert(opts.background.begin(), opts.background.end());

  dl::KnowledgeBase kb_t{result.tbox, abox_t};
  dl::KnowledgeBase kb_h{result.tbox, abox_h};
  result.text_graph =
      semgraph::abox_to_graph(dl::saturate(kb_t, opts.match.reasoner));
  result.hyp_graph =
      semgraph::abox_to_graph(dl::saturate(kb_h, opts.match.reasoner));

  result.witness = semgraph::detect_subgraph(result.text_graph,
                                             result.hyp_graph, result.tbox,
                                             opts.match);
  result.entailed = result.witness.has_value();
  return result;
}

std::vector<CorpusPair> load_corpus(std::istream& in) {
  std::vector<CorpusPair> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    CorpusPair p;
    std::string gold;
    if (!std::getline(fields, p.id, '\t') ||
        !std::getline(fields, p.text, '\t') ||
        !std::getline(fields, p.hypothesis, '\t') ||
        !std::getline(fields, gold, '\t'))
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": expected id<TAB>text<TAB>hypothesis<TAB>label");
    if (gold == "true")
      p.gold = true;
    else if (gold == "false")
      p.gold = false;
    else
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": label must be true or false");
    if (!seen.insert(p.id).second)
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": duplicate id '" + p.id + "'");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CorpusPair> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(in);
}

EvalReport evaluate(const std::vector<CorpusPair>& corpus,
                    const sentence::WordList& words, const RteOptions& opts,
                    unsigned jobs) {
  struct Outcome {
    bool skipped = false;
    bool predicted = false;
    std::string reason;
  };
  std::vector<Outcome> outcomes(corpus.size());

  auto run_one = [&](std::size_t i) {
    try {
      outcomes[i].predicted =
          rte_check(corpus[i].text, corpus[i].hypothesis, words, opts).entailed;
    } catch (const std::exception& e) {
      outcomes[i].skipped = true;
      outcomes[i].reason = e.what();
    }
  };

  if (jobs <= 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    unsigned n = std::min<std::size_t>(jobs, corpus.size());
    for (unsigned w = 0; w < n; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < corpus.size();
             i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& t : workers) t.join();
  }

  EvalReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (outcomes[i].skipped) {
      report.skipped.emplace_back(corpus[i].id, outcomes[i].reason);
      continue;
    }
    bool p = outcomes[i].predicted, g = corpus[i].gold;
    (p ? (g ? report.tp : report.fp) : (g ? report.fn : report.tn))++;
    report.pairs.push_back({corpus[i].id, p, g});
  }
  return report;
}

std::string report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["matrix"] = {{"tp", report.tp},
                 {"fp", report.fp},
                 {"fn", report.fn},
                 {"tn", report.tn}};
  j["skipped"] = nlohmann::ordered_json::array();
  for (const auto& [id, reason] : report.skipped)
    j["skipped"].push_back({{"id", id}, {"reason", reason}});
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : report.pairs)
    j["pairs"].push_back(
        {{"id", p.id}, {"predicted", p.predicted}, {"gold", p.gold}});
  return j.dump(2) + "\n";
}

std::string report_tsv(const EvalReport& report) {
  std::ostringstream os;
  os << "# id\tpredicted\tgold\n";
  for (const auto& p : report.pairs)
    os << p.id << '\t' << (p.predicted ? "true" : "false") << '\t'
       << (p.gold ? "true" : "false") << '\n';
  for (const auto& [id, reason] : report.skipped)
    os << id << "\tskipped\t" << reason << '\n';
  os << "matrix\ttp=" << report.tp << "\tfp=" << report.fp
     << "\tfn=" << report.fn << "\ttn=" << report.tn << '\n';
  return os.str();
}

}  // namespace rte::pipeline
