#include <doctest.h>

#include <sstream>

#include "rte/dl_text.hpp"
#include "rte/lexicon.hpp"
#include "rte/tableau.hpp"

using namespace rte::lexicon;
using rte::dl::Gci;
using rte::dl::parse_concept;
using rte::dl::parse_gci;

TEST_CASE("relation compilation") {
  CHECK(lex_to_tbox({{"CAT", LexKind::Hyponym, "ANIMAL"}}) ==
        std::set<Gci>{parse_gci("CAT => ANIMAL")});
  CHECK(lex_to_tbox({{"CAR", LexKind::Synonym, "AUTOMOBILE"}}) ==
        std::set<Gci>{parse_gci("CAR => AUTOMOBILE"),
                      parse_gci("AUTOMOBILE => CAR")});
  CHECK(lex_to_tbox({{"SLEEP", LexKind::Antonym, "WAKE"}}) ==
        std::set<Gci>{parse_gci("SLEEP => !WAKE"),
                      parse_gci("WAKE => !SLEEP")});
  CHECK(lex_to_tbox({{"CAT", LexKind::Cohyponym, "DOG"}}) ==
        std::set<Gci>{parse_gci("CAT => !DOG"), parse_gci("DOG => !CAT")});
  CHECK(lex_to_tbox({}).empty());
}

TEST_CASE("relevant_tbox keeps only relations inside the pair vocabulary") {
  std::vector<LexRelation> rels{{"CAT", LexKind::Hyponym, "ANIMAL"},
                                {"DOG", LexKind::Hyponym, "ANIMAL"}};
  CHECK(relevant_tbox(rels, {"CAT", "EAT"}, {"ANIMAL", "EAT"}) ==
        std::set<Gci>{parse_gci("CAT => ANIMAL")});
  CHECK(relevant_tbox(rels, {"HOUSE"}, {"TREE"}).empty());

  std::vector<LexRelation> shop{{"CAT", LexKind::Hyponym, "ANIMAL"},
                                {"PET_SHOP", LexKind::Hyponym, "SHOP"},
                                {"APPLE", LexKind::Hyponym, "FRUIT"}};
  CHECK(relevant_tbox(shop,
                      {"BUY", "JOHN", "CAT", "PET_SHOP", "50_EUROS"},
                      {"BUY", "JOHN", "ANIMAL", "SHOP", "50_EUROS"}) ==
        std::set<Gci>{parse_gci("CAT => ANIMAL"),
                      parse_gci("PET_SHOP => SHOP")});
}

TEST_CASE("compiled hyponymy is one-directional") {
  auto tbox = lex_to_tbox({{"CAT", LexKind::Hyponym, "ANIMAL"}});
  CHECK(rte::dl::is_subsumed(tbox, parse_concept("CAT"),
                             parse_concept("ANIMAL")));
  CHECK_FALSE(rte::dl::is_subsumed(tbox, parse_concept("ANIMAL"),
                                   parse_concept("CAT")));
}

TEST_CASE("compiled disjointness makes the intersection unsatisfiable") {
  for (LexKind kind : {LexKind::Antonym, LexKind::Cohyponym}) {
    rte::dl::KnowledgeBase kb;
    kb.tbox = lex_to_tbox({{"X", kind, "Y"}});
    kb.abox.insert(
        rte::dl::ConceptAssertion{{"x"}, parse_concept("X & Y")});
    CHECK_FALSE(rte::dl::is_consistent(kb));
  }
}

TEST_CASE("synonymy is symmetric") {
  CHECK(lex_to_tbox({{"A", LexKind::Synonym, "B"}}) ==
        lex_to_tbox({{"B", LexKind::Synonym, "A"}}));
}

TEST_CASE("relevant_tbox is a subset of lex_to_tbox") {
  std::vector<LexRelation> rels{{"CAT", LexKind::Hyponym, "ANIMAL"},
                                {"SLEEP", LexKind::Antonym, "WAKE"},
                                {"CAR", LexKind::Synonym, "AUTOMOBILE"}};
  auto full = lex_to_tbox(rels);
  auto part = relevant_tbox(rels, {"CAT", "SLEEP"}, {"ANIMAL", "WAKE"});
  for (const auto& g : part) CHECK(full.count(g));
}

TEST_CASE("file format round-trips and normalizes") {
  std::istringstream in(
      "# comment\n"
      "cat\thypo\tanimal\n"
      "pet shop\thypo\tshop\n"
      "sleep\tant\twake\n"
      "car\tsyn\tautomobile\n"
      "cat\tcohypo\tdog\n");
  auto rels = load_lexicon(in);
  REQUIRE(rels.size() == 5);
  CHECK(rels[0] == LexRelation{"CAT", LexKind::Hyponym, "ANIMAL"});
  CHECK(rels[1] == LexRelation{"PET_SHOP", LexKind::Hyponym, "SHOP"});

  // load -> save -> load is the identity, and the saved bytes are stable
  std::ostringstream out;
  save_lexicon(out, rels);
  std::istringstream back(out.str());
  auto reloaded = load_lexicon(back);
  CHECK(reloaded == rels);
  std::ostringstream out2;
  save_lexicon(out2, reloaded);
  CHECK(out2.str() == out.str());
}

TEST_CASE("malformed lines are rejected") {
  auto load = [](const char* text) {
    std::istringstream in(text);
    return load_lexicon(in);
  };
  CHECK_THROWS_AS(load("cat\tnear\tanimal\n"), MalformedRelationError);
  CHECK_THROWS_AS(load("cat\thypo\n"), MalformedRelationError);
  CHECK_THROWS_AS(load("cat\thypo\tanimal\textra\n"), MalformedRelationError);
  CHECK_THROWS_AS(load("cat\thypo\tcat\n"), MalformedRelationError);
  CHECK_THROWS_AS(load("\thypo\tanimal\n"), MalformedRelationError);
}

TEST_CASE("kind tokens") {
  CHECK(std::string(kind_token(LexKind::Synonym)) == "syn");
  CHECK(std::string(kind_token(LexKind::Antonym)) == "ant");
  CHECK(std::string(kind_token(LexKind::Hyponym)) == "hypo");
  CHECK(std::string(kind_token(LexKind::Cohyponym)) == "cohypo");
}
