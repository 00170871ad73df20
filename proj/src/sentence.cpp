#include "rte/sentence.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace rte::sentence {

namespace {

const std::set<std::string> kCopulas = {"is", "are", "was", "were"};
const std::set<std::string> kDeterminers = {"a", "an", "the"};
const std::set<std::string> kPrepositions = {"at", "in", "on",
                                             "for", "to", "with"};
const std::set<std::string> kNegAux = {"does", "did", "do"};

const std::map<std::string, std::vector<std::string>> kContractions = {
    {"doesn't", {"does", "not"}},
    {"didn't", {"did", "not"}},
    {"don't", {"do", "not"}},
};

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto it = kContractions.find(cur);
    if (it != kContractions.end())
      out.insert(out.end(), it->second.begin(), it->second.end());
    else
      out.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u) || ch == '\'') {
      cur.push_back(static_cast<char>(std::tolower(u)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

// suffix-rule singular/lemma candidates, most specific first
std::vector<std::string> suffix_candidates(const std::string& w) {
  std::vector<std::string> out;
  auto ends = [&](const char* s) {
    std::string_view v(s);
    return w.size() > v.size() && w.ends_with(v);
  };
  if (ends("ies")) out.push_back(w.substr(0, w.size() - 3) + "y");
  if (ends("es")) out.push_back(w.substr(0, w.size() - 2));
  if (ends("s") && !ends("ss")) out.push_back(w.substr(0, w.size() - 1));
  if (ends("ed")) {
    out.push_back(w.substr(0, w.size() - 2));
    out.push_back(w.substr(0, w.size() - 1));  // loved -> love
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<std::string> toks, const WordList& words)
      : toks_(std::move(toks)), words_(words) {}

  SentenceStruct parse() {
    SentenceStruct s;
    s.subject = parse_np();
    if (at_copula()) {
      ++pos_;
      s.copular = true;
      s.complement = parse_copula_pred();
    } else {
      parse_verbal(s);
    }
    if (pos_ != toks_.size()) throw ParseError(pos_, "end of sentence");
    return s;
  }

 private:
  const std::string& tok(std::size_t ahead = 0) const {
    static const std::string empty;
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : empty;
  }

  bool done() const { return pos_ >= toks_.size(); }
  bool at_copula() const { return kCopulas.count(tok()) != 0; }
  bool at_det() const { return kDeterminers.count(tok()) != 0; }
  bool at_prep() const { return kPrepositions.count(tok()) != 0; }
  bool at_adjective() const { return words_.adjectives.count(tok()) != 0; }
  bool at_adverb() const { return words_.adverbs.count(tok()) != 0; }
  bool at_proper() const { return words_.proper_names.count(tok()) != 0; }

  // longest noun match at the current position; returns (token count, lemma)
  std::pair<std::size_t, std::string> noun_match() const {
    std::size_t best_len = 0;
    for (const auto& entry : words_.nouns)
      best_len = std::max(best_len, entry.size());
    for (std::size_t len = std::min(best_len, toks_.size() - pos_); len >= 1;
         --len) {
      std::vector<std::string> cand(toks_.begin() + pos_,
                                    toks_.begin() + pos_ + len);
      if (words_.nouns.count(cand)) {
        std::string lemma;
        for (const auto& w : cand) {
          if (!lemma.empty()) lemma.push_back(' ');
          lemma += w;
        }
        return {len, lemma};
      }
      if (len == 1) {
        for (const auto& base : suffix_candidates(cand.front()))
          if (words_.nouns.count({base})) return {1, base};
      }
    }
    return {0, {}};
  }

  bool at_np_start() const {
    if (done()) return false;
    return at_det() || at_adjective() || at_proper() || noun_match().first > 0;
  }

  ArgStruct parse_np(bool allow_det = true) {
    ArgStruct arg;
    if (at_proper()) {
      arg.head = tok();
      arg.proper = true;
      ++pos_;
      return arg;
    }
    if (allow_det && at_det()) ++pos_;
    while (at_adjective()) {
      arg.adjectives.push_back(tok());
      ++pos_;
    }
    auto [len, lemma] = noun_match();
    if (len == 0) throw ParseError(pos_, "noun");
    arg.head = lemma;
    pos_ += len;
    if (tok() == "who") {
      ++pos_;
      if (!at_copula()) throw ParseError(pos_, "copula after 'who'");
      ++pos_;
      arg.relative = std::make_shared<CopulaPred>(parse_copula_pred());
    }
    return arg;
  }

  CopulaPred parse_copula_pred() {
    CopulaPred pred;
    bool had_det = at_det();
    if (had_det) ++pos_;
    while (at_adjective()) {
      pred.adjectives.push_back(tok());
      ++pos_;
    }
    // relational noun with of-complement: "the father of NP"
    auto rel = words_.relational_nouns.find(tok());
    if (rel != words_.relational_nouns.end() && tok(1) == "of") {
      pos_ += 2;
      pred.role = rel->second;
      pred.of_arg = std::make_shared<ArgStruct>(parse_np());
      return pred;
    }
    if (auto [len, lemma] = noun_match(); len > 0) {
      pred.noun = lemma;
      pos_ += len;
      return pred;
    }
    if (had_det || pred.adjectives.empty())
      throw ParseError(pos_, "adjective or noun after copula");
    return pred;
  }

  void parse_verbal(SentenceStruct& s) {
    if (kNegAux.count(tok()) && tok(1) == "not") {
      s.negated = true;
      pos_ += 2;
    }
    s.verb = lemmatize_verb(tok());
    if (s.verb.empty()) throw ParseError(pos_, "verb");
    s.verb_concept = words_.verbs.at(s.verb);
    ++pos_;
    while (at_adverb()) {
      s.modifiers.push_back(tok());
      ++pos_;
    }
    if (at_np_start()) s.object = parse_np();
    while (!done()) {
      if (at_adverb()) {
        s.modifiers.push_back(tok());
        ++pos_;
      } else if (at_prep()) {
        parse_pp(s);
      } else {
        break;
      }
    }
  }

  void parse_pp(SentenceStruct& s) {
    std::string prep = tok();
    ++pos_;
    ArgStruct np = parse_np();
    if (prep == "for" && !s.object) {
      s.object = std::move(np);  // Patient-like argument
    } else {
      s.modifiers.push_back(np.head);
    }
    // further determiner-less NPs belong to the same PP ("on monday 8 may")
    while (!done() && !at_det() && !at_prep() && !at_adverb() &&
           noun_match().first > 0) {
      s.modifiers.push_back(parse_np(false).head);
    }
  }

  std::string lemmatize_verb(const std::string& surface) const {
    auto irr = words_.irregular.find(surface);
    if (irr != words_.irregular.end()) return irr->second;
    if (words_.verbs.count(surface)) return surface;
    for (const auto& base : suffix_candidates(surface))
      if (words_.verbs.count(base)) return base;
    return {};
  }

  std::vector<std::string> toks_;
  const WordList& words_;
  std::size_t pos_ = 0;
};

}  // namespace

SentenceStruct parse_controlled(const std::string& text,
                                const WordList& words) {
  return Parser(tokenize(text), words).parse();
}

namespace {

using dl::Assertion;
using dl::Concept;
using dl::ConceptAssertion;
using dl::Individual;
using dl::RoleAssertion;

struct AboxBuilder {
  std::set<Assertion> out;
  int arg_count = 0;

  Individual realize(const ArgStruct& arg, bool negate,
                     const CopulaPred* extra) {
    Individual ind{"x" + std::to_string(++arg_count)};
    std::vector<Concept> parts;
    parts.push_back(Concept::atomic(dl::concept_token(arg.head)));
    for (const auto& adj : arg.adjectives)
      parts.push_back(Concept::atomic(dl::concept_token(adj)));
    const CopulaPred* preds[2] = {arg.relative.get(), extra};
    for (const CopulaPred* p : preds) {
      if (!p) continue;
      for (const auto& adj : p->adjectives)
        parts.push_back(Concept::atomic(dl::concept_token(adj)));
      if (p->noun) parts.push_back(Concept::atomic(dl::concept_token(*p->noun)));
    }
    Concept label = Concept::conjunction(std::move(parts));
    if (negate) label = Concept::negation(label);
    out.insert(ConceptAssertion{ind, label});
    for (const CopulaPred* p : preds) {
      if (p && p->role) {
        Individual target = realize(*p->of_arg, false, nullptr);
        out.insert(RoleAssertion{ind, target, *p->role});
      }
    }
    return ind;
  }
};

}  // namespace

std::set<dl::Assertion> build_abox(const SentenceStruct& s) {
  AboxBuilder b;
  if (s.copular) {
    b.realize(s.subject, false, s.complement ? &*s.complement : nullptr);
    return std::move(b.out);
  }
  Individual event{"e1"};
  std::vector<Concept> parts;
  parts.push_back(Concept::atomic(dl::concept_token(s.verb_concept)));
  for (const auto& m : s.modifiers)
    parts.push_back(Concept::atomic(dl::concept_token(m)));
  Concept label = Concept::conjunction(std::move(parts));
  if (s.negated) label = Concept::negation(label);
  b.out.insert(ConceptAssertion{event, label});

  Individual subj = b.realize(s.subject, false, nullptr);
  b.out.insert(RoleAssertion{event, subj, "Agent"});
  if (s.object) {
    Individual obj = b.realize(*s.object, s.negated, nullptr);
    b.out.insert(RoleAssertion{event, obj, "Patient"});
  }
  return std::move(b.out);
}

WordList load_wordlist(std::istream& in) {
  WordList wl;
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    std::string key = line, value;
    if (auto tab = line.find('\t'); tab != std::string::npos) {
      key = line.substr(0, tab);
      value = line.substr(tab + 1);
    }
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (section == "noun") {
      std::istringstream ws(key);
      std::vector<std::string> entry;
      for (std::string w; ws >> w;) entry.push_back(w);
      wl.nouns.insert(std::move(entry));
    } else if (section == "proper") {
      wl.proper_names.insert(key);
    } else if (section == "verb") {
      std::string concept_lemma = value.empty() ? key : value;
      std::transform(concept_lemma.begin(), concept_lemma.end(), concept_lemma.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      wl.verbs.emplace(key, concept_lemma);
    } else if (section == "adjective") {
      wl.adjectives.insert(key);
    } else if (section == "adverb") {
      wl.adverbs.insert(key);
    } else if (section == "relnoun") {
      if (value.empty())
        throw std::runtime_error("wordlist line " + std::to_string(lineno) +
                                 ": relnoun needs a role name");
      wl.relational_nouns.emplace(key, dl::role_token(value));
      wl.nouns.insert({key});
    } else if (section == "irregular") {
      if (value.empty())
        throw std::runtime_error("wordlist line " + std::to_string(lineno) +
                                 ": irregular needs a lemma");
      std::transform(value.begin(), value.end(), value.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      wl.irregular.emplace(key, value);
    } else {
      throw std::runtime_error("wordlist line " + std::to_string(lineno) +
                               ": entry outside a [section]");
    }
  }
  return wl;
}

WordList load_wordlist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open word list: " + path);
  return load_wordlist(in);
}

}  // namespace rte::sentence
