#include "rte/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace rte::lexicon {

namespace {

dl::Concept atom(const std::string& name) { return dl::Concept::atomic(name); }

dl::Concept neg(const std::string& name) {
  return dl::Concept::negation(dl::Concept::atomic(name));
}

LexKind parse_kind(const std::string& tok) {
  if (tok == "syn") return LexKind::Synonym;
  if (tok == "ant") return LexKind::Antonym;
  if (tok == "hypo") return LexKind::Hyponym;
  if (tok == "cohypo") return LexKind::Cohyponym;
  throw MalformedRelationError("unknown relation kind '" + tok + "'");
}

}  // namespace

const char* kind_token(LexKind k) {
  switch (k) {
    case LexKind::Synonym: return "syn";
    case LexKind::Antonym: return "ant";
    case LexKind::Hyponym: return "hypo";
    case LexKind::Cohyponym: return "cohypo";
  }
  return "?";
}

std::set<dl::Gci> lex_to_tbox(const std::vector<LexRelation>& relations) {
  std::set<dl::Gci> out;
  for (const auto& r : relations) {
    switch (r.kind) {
      case LexKind::Synonym:
        out.insert({atom(r.left), atom(r.right)});
        out.insert({atom(r.right), atom(r.left)});
        break;
      case LexKind::Antonym:
      case LexKind::Cohyponym:
        out.insert({atom(r.left), neg(r.right)});
        out.insert({atom(r.right), neg(r.left)});
        break;
      case LexKind::Hyponym:
        out.insert({atom(r.left), atom(r.right)});
        break;
    }
  }
  return out;
}

std::set<dl::Gci> relevant_tbox(const std::vector<LexRelation>& relations,
                                const std::set<std::string>& vocab_t,
                                const std::set<std::string>& vocab_h) {
  std::vector<LexRelation> kept;
  auto known = [&](const std::string& term) {
    return vocab_t.count(term) || vocab_h.count(term);
  };
  for (const auto& r : relations)
    if (known(r.left) && known(r.right)) kept.push_back(r);
  return lex_to_tbox(kept);
}

std::vector<LexRelation> load_lexicon(std::istream& in) {
  std::vector<LexRelation> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string left, kind, right, extra;
    if (!std::getline(fields, left, '\t') || !std::getline(fields, kind, '\t') ||
        !std::getline(fields, right, '\t'))
      throw MalformedRelationError("line " + std::to_string(lineno) +
                                   ": expected left<TAB>kind<TAB>right");
    if (std::getline(fields, extra, '\t'))
      throw MalformedRelationError("line " + std::to_string(lineno) +
                                   ": trailing field");
    LexRelation rel{dl::concept_token(left), parse_kind(kind),
                    dl::concept_token(right)};
    if (rel.left.empty() || rel.right.empty())
      throw MalformedRelationError("line " + std::to_string(lineno) +
                                   ": empty term");
    if (rel.left == rel.right)
      throw MalformedRelationError("line " + std::to_string(lineno) +
                                   ": relation between a term and itself");
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<LexRelation> load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return load_lexicon(in);
}

void save_lexicon(std::ostream& out,
                  const std::vector<LexRelation>& relations) {
  for (const auto& r : relations)
    out << r.left << '\t' << kind_token(r.kind) << '\t' << r.right << '\n';
}

}  // namespace rte::lexicon
