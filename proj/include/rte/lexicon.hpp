#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/dl.hpp"

namespace rte::lexicon {

enum class LexKind { Synonym, Antonym, Hyponym, Cohyponym };

// left `hypo` right reads "left is a hyponym of right".
struct LexRelation {
  std::string left;
  LexKind kind;
  std::string right;
  auto operator<=>(const LexRelation&) const = default;
};

class MalformedRelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compiles lexical relations into GCIs: synonymy as mutual inclusion,
// antonymy and co-hyponymy as mutual disjointness, hyponymy as inclusion
// of the hyponym in the hypernym.
std::set<dl::Gci> lex_to_tbox(const std::vector<LexRelation>& relations);

// lex_to_tbox restricted to relations whose terms both occur in the
// combined vocabulary of the sentence pair.
std::set<dl::Gci> relevant_tbox(const std::vector<LexRelation>& relations,
                                const std::set<std::string>& vocab_t,
                                const std::set<std::string>& vocab_h);

// File format: `left<TAB>kind<TAB>right`, kind in {syn, ant, hypo, cohypo},
// `#` starts a comment. Tokens are normalized on load.
std::vector<LexRelation> load_lexicon(std::istream& in);
std::vector<LexRelation> load_lexicon_file(const std::string& path);
void save_lexicon(std::ostream& out, const std::vector<LexRelation>& relations);

const char* kind_token(LexKind k);

}  // namespace rte::lexicon
