#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/dl.hpp"

namespace rte::sentence {

// Lexical categories for the controlled fragment. Nouns may be multi-word
// ("pet shop", "50 euros"); verbs may alias to a shared concept lemma
// (sell -> buy); relational nouns carry the role their of-complement
// attaches with (father -> Father-of).
struct WordList {
  std::set<std::vector<std::string>> nouns;
  std::set<std::string> proper_names;
  std::map<std::string, std::string> verbs;      // lemma -> concept lemma
  std::set<std::string> adjectives;
  std::set<std::string> adverbs;
  std::map<std::string, std::string> relational_nouns;  // lemma -> role name
  std::map<std::string, std::string> irregular;  // surface -> verb lemma
};

WordList load_wordlist(std::istream& in);
WordList load_wordlist_file(const std::string& path);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : std::runtime_error("parse error at token " + std::to_string(position) +
                           ": expected " + expected),
        position(position),
        expected(expected) {}
  std::size_t position;
  std::string expected;
};

struct CopulaPred;

// Noun phrase: head noun or proper name with its adjectives, optionally
// restricted by a copular relative clause ("someone who is ...").
struct ArgStruct {
  std::string head;  // lemma, lower-case; multi-word joined by spaces
  bool proper = false;
  std::vector<std::string> adjectives;
  std::shared_ptr<CopulaPred> relative;  // from "who is ..."
};

// Copular predicate: adjectives, an optional predicate nominal, or a
// relational noun with its of-complement ("the father of NP").
struct CopulaPred {
  std::vector<std::string> adjectives;
  std::optional<std::string> noun;
  std::optional<std::string> role;  // set together with of_arg
  std::shared_ptr<ArgStruct> of_arg;
};

struct SentenceStruct {
  bool copular = false;
  std::string verb;          // lemma; empty for copular sentences
  std::string verb_concept;  // concept lemma after word-list aliasing
  bool negated = false;
  std::vector<std::string> modifiers;  // lemmas, in surface order
  ArgStruct subject;
  std::optional<ArgStruct> object;
  std::optional<CopulaPred> complement;  // copular sentences only
};

// Parses the controlled fragment:
//   S  := NP VP
//   NP := Det? Adj* Noun RelClause? | ProperName
//   VP := Copula CopulaPred | Neg? Verb Adv* NP? (PP | Adv)*
//   PP := Prep NP+                (extra NPs must be determiner-less)
//   CopulaPred := Adj+ | Det? Adj* Noun ("of" NP)?
//   RelClause  := "who" Copula CopulaPred
// Articles and tense are discarded; negation is "does/did not" or the
// contracted forms before a bare verb.
SentenceStruct parse_controlled(const std::string& text, const WordList& words);

// Davidsonian A-Box: fresh event individual e1 labeled with the verb
// concept and its modifiers, argument individuals x1, x2, ... labeled with
// head and adjectives, Agent/Patient edges. Copular sentences produce no
// event; the predicate folds into the subject. Negation wraps the event
// label and the object label, the subject stays positive.
std::set<dl::Assertion> build_abox(const SentenceStruct& s);

}  // namespace rte::sentence
