#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rte/dl_text.hpp"
#include "rte/pipeline.hpp"

using namespace rte::pipeline;
using rte::lexicon::LexKind;
using rte::lexicon::LexRelation;

namespace {

const rte::sentence::WordList& words() {
  static auto w = rte::sentence::load_wordlist_file(
      std::string(RTE_DATA_DIR) + "/wordlist.txt");
  return w;
}

RteOptions with_lexicon(std::vector<LexRelation> rels) {
  RteOptions o;
  o.lexicon = std::move(rels);
  return o;
}

}  // namespace

TEST_CASE("hyponymy licenses entailment one way only") {
  auto opts = with_lexicon({{"CAT", LexKind::Hyponym, "ANIMAL"}});
  CHECK(rte_check("a cat eats", "an animal eats", words(), opts).entailed);
  CHECK_FALSE(
      rte_check("an animal eats", "a cat eats", words(), opts).entailed);
}

TEST_CASE("identity pairs are entailed") {
  RteOptions opts;
  for (const char* s : {"John loves Mary", "the big cat sleeps",
                        "John didn't buy a fruit"})
    CHECK(rte_check(s, s, words(), opts).entailed);
}

TEST_CASE("witness and graphs are exposed") {
  auto opts = with_lexicon({{"CAT", LexKind::Hyponym, "ANIMAL"}});
  RteResult r = rte_check("a cat eats", "an animal eats", words(), opts);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->mapping.size() == 2);
  CHECK(r.text_graph.nodes.size() == 2);
  CHECK(r.hyp_graph.nodes.size() == 2);
  CHECK(r.tbox.size() == 1);
}

TEST_CASE("background T-Box axioms are used as-is") {
  RteOptions opts;
  for (const char* line :
       {"PARENT => E Parent-of.SOMEONE", "E Parent-of.SOMEONE => PARENT",
        "GRANDFATHER => E Father-of.PARENT",
        "E Father-of.PARENT => GRANDFATHER"})
    opts.background.insert(rte::dl::parse_gci(line));
  CHECK(rte_check("Adam is the father of someone who is a parent of someone",
                  "Adam is a grandfather", words(), opts)
            .entailed);
  CHECK_FALSE(
      rte_check("Adam is a grandfather",
                "Adam is the father of someone who is a parent of someone",
                words(), opts)
          .entailed);
}

TEST_CASE("corpus loading") {
  std::istringstream in(
      "# id\ttext\thypothesis\tgold\n"
      "p1\tA cat eats\tAn animal eats\ttrue\n"
      "p2\tJohn sleeps\tJohn loves Mary\tfalse\n");
  auto corpus = load_corpus(in);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].id == "p1");
  CHECK(corpus[0].gold);
  CHECK(corpus[1].hypothesis == "John loves Mary");
  CHECK_FALSE(corpus[1].gold);

  std::istringstream dup(
      "p1\tA cat eats\tAn animal eats\ttrue\n"
      "p1\tJohn sleeps\tJohn sleeps\ttrue\n");
  CHECK_THROWS(load_corpus(dup));
  std::istringstream badgold("p1\tA cat eats\tAn animal eats\tmaybe\n");
  CHECK_THROWS(load_corpus(badgold));
}

TEST_CASE("evaluate totals are exact") {
  std::vector<CorpusPair> corpus{
      {"t1", "A cat eats", "An animal eats", true},
      {"t2", "An animal eats", "A cat eats", false},
      {"t3", "John sleeps", "John sleeps", false},  // predicted true -> fp
      {"t4", "Colorless green ideas sleep furiously", "John sleeps", false},
  };
  auto report = evaluate(corpus, words(),
                         with_lexicon({{"CAT", LexKind::Hyponym, "ANIMAL"}}));
  CHECK(report.tp == 1);
  CHECK(report.tn == 1);
  CHECK(report.fp == 1);
  CHECK(report.fn == 0);
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped[0].first == "t4");
  CHECK(report.tp + report.fp + report.fn + report.tn +
            static_cast<int>(report.skipped.size()) ==
        static_cast<int>(corpus.size()));
  CHECK(report.pairs.size() == 3);

  CHECK(evaluate({}, words(), RteOptions{}).pairs.empty());
}

TEST_CASE("evaluation is order independent and deterministic") {
  auto corpus = load_corpus_file(std::string(RTE_DATA_DIR) + "/corpus.tsv");
  auto lexicon =
      rte::lexicon::load_lexicon_file(std::string(RTE_DATA_DIR) +
                                      "/lexicon.tsv");
  RteOptions opts;
  opts.lexicon = lexicon;

  auto r1 = evaluate(corpus, words(), opts);
  auto r2 = evaluate(corpus, words(), opts);
  CHECK(report_json(r1) == report_json(r2));

  auto shuffled = corpus;
  std::mt19937 rng(5);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto r3 = evaluate(shuffled, words(), opts);
  CHECK(r1.tp == r3.tp);
  CHECK(r1.fp == r3.fp);
  CHECK(r1.fn == r3.fn);
  CHECK(r1.tn == r3.tn);
  CHECK(r1.skipped.size() == r3.skipped.size());

  // parallel evaluation matches the serial reduction
  auto r4 = evaluate(corpus, words(), opts, 4);
  CHECK(report_json(r1) == report_json(r4));
}

TEST_CASE("json report schema") {
  EvalReport r;
  r.tp = 2;
  r.fp = 1;
  r.fn = 0;
  r.tn = 3;
  r.skipped.push_back({"s1", "parse error"});
  r.pairs.push_back({"p1", true, true});

  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["matrix"]["tp"] == 2);
  CHECK(j["matrix"]["fp"] == 1);
  CHECK(j["matrix"]["fn"] == 0);
  CHECK(j["matrix"]["tn"] == 3);
  REQUIRE(j["skipped"].size() == 1);
  CHECK(j["skipped"][0]["id"] == "s1");
  CHECK(j["skipped"][0]["reason"] == "parse error");
  REQUIRE(j["pairs"].size() == 1);
  CHECK(j["pairs"][0]["id"] == "p1");
  CHECK(j["pairs"][0]["predicted"] == true);
  CHECK(j["pairs"][0]["gold"] == true);
}

TEST_CASE("tsv report lists every pair") {
  EvalReport r;
  r.tp = 1;
  r.pairs.push_back({"p1", true, true});
  std::string tsv = report_tsv(r);
  CHECK(tsv.find("p1") != std::string::npos);
}
