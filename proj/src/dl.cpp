#include "rte/dl.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rte::dl {

struct Concept::Node {
  ConceptKind kind;
  std::string name;           // Atomic
  Role role;                  // Exists / Forall
  std::vector<Concept> args;  // Not: 1, And/Or: >= 2, Exists/Forall: 1
};

Concept::Concept() { *this = top(); }

Concept Concept::top() {
  static const Concept c(
      std::make_shared<const Node>(Node{ConceptKind::Top, {}, {}, {}}));
  return c;
}

Concept Concept::bottom() {
  static const Concept c(
      std::make_shared<const Node>(Node{ConceptKind::Bottom, {}, {}, {}}));
  return c;
}

Concept Concept::atomic(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty concept name");
  return Concept(std::make_shared<const Node>(
      Node{ConceptKind::Atomic, std::move(name), {}, {}}));
}

Concept Concept::negation(Concept inner) {
  return Concept(std::make_shared<const Node>(
      Node{ConceptKind::Not, {}, {}, {std::move(inner)}}));
}

Concept Concept::nary(ConceptKind kind, std::vector<Concept> members) {
  std::vector<Concept> flat;
  for (auto& m : members) {
    if (m.kind() == kind) {
      for (const auto& inner : m.members()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(m));
    }
  }
  std::vector<Concept> uniq;
  for (auto& m : flat) {
    if (std::find(uniq.begin(), uniq.end(), m) == uniq.end())
      uniq.push_back(std::move(m));
  }
  if (uniq.empty()) return kind == ConceptKind::And ? top() : bottom();
  if (uniq.size() == 1) return uniq.front();
  return Concept(std::make_shared<const Node>(Node{kind, {}, {}, std::move(uniq)}));
}

Concept Concept::conjunction(std::vector<Concept> members) {
  return nary(ConceptKind::And, std::move(members));
}

Concept Concept::disjunction(std::vector<Concept> members) {
  return nary(ConceptKind::Or, std::move(members));
}

Concept Concept::exists(Role role, Concept filler) {
  return Concept(std::make_shared<const Node>(
      Node{ConceptKind::Exists, {}, std::move(role), {std::move(filler)}}));
}

Concept Concept::forall(Role role, Concept filler) {
  return Concept(std::make_shared<const Node>(
      Node{ConceptKind::Forall, {}, std::move(role), {std::move(filler)}}));
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Concept& Concept::operand() const { return node_->args.front(); }
std::span<const Concept> Concept::members() const { return node_->args; }
const Role& Concept::role() const { return node_->role; }
const Concept& Concept::filler() const { return node_->args.front(); }

int Concept::compare(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->kind != b.node_->kind)
    return static_cast<int>(a.node_->kind) < static_cast<int>(b.node_->kind) ? -1 : 1;
  switch (a.node_->kind) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Atomic:
      return a.node_->name.compare(b.node_->name);
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      if (a.node_->role != b.node_->role)
        return a.node_->role < b.node_->role ? -1 : 1;
      break;
    }
    default:
      break;
  }
  const auto& xs = a.node_->args;
  const auto& ys = b.node_->args;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  }
  return 0;
}

RoleAssertion make_role_assertion(Individual a, Individual b, const Role& r) {
  if (r.inverse) return RoleAssertion{std::move(b), std::move(a), r.name};
  return RoleAssertion{std::move(a), std::move(b), r.name};
}

Concept nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
      return c;
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ms;
      for (const auto& m : c.members()) ms.push_back(nnf(m));
      return c.kind() == ConceptKind::And ? Concept::conjunction(std::move(ms))
                                          : Concept::disjunction(std::move(ms));
    }
    case ConceptKind::Exists:
      return Concept::exists(c.role(), nnf(c.filler()));
    case ConceptKind::Forall:
      return Concept::forall(c.role(), nnf(c.filler()));
    case ConceptKind::Not: {
      const Concept& in = c.operand();
      switch (in.kind()) {
        case ConceptKind::Top:
          return Concept::bottom();
        case ConceptKind::Bottom:
          return Concept::top();
        case ConceptKind::Atomic:
          return c;
        case ConceptKind::Not:
          return nnf(in.operand());
        case ConceptKind::And:
        case ConceptKind::Or: {
          std::vector<Concept> ms;
          for (const auto& m : in.members())
            ms.push_back(nnf(Concept::negation(m)));
          return in.kind() == ConceptKind::And
                     ? Concept::disjunction(std::move(ms))
                     : Concept::conjunction(std::move(ms));
        }
        case ConceptKind::Exists:
          return Concept::forall(in.role(), nnf(Concept::negation(in.filler())));
        case ConceptKind::Forall:
          return Concept::exists(in.role(), nnf(Concept::negation(in.filler())));
      }
    }
  }
  throw std::logic_error("nnf: unreachable");
}

Concept internalize(const std::set<Gci>& tbox) {
  std::vector<Concept> parts;
  for (const auto& gci : tbox)
    parts.push_back(
        Concept::disjunction({nnf(Concept::negation(gci.lhs)), nnf(gci.rhs)}));
  if (parts.empty()) return Concept::top();
  return Concept::conjunction(std::move(parts));
}

void collect_signature(const Concept& c, Signature& out) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Atomic:
      out.concepts.insert(c.name());
      return;
    case ConceptKind::Not:
      collect_signature(c.operand(), out);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      for (const auto& m : c.members()) collect_signature(m, out);
      return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      out.roles.insert(c.role().name);
      collect_signature(c.filler(), out);
      return;
  }
}

Signature signature(const KnowledgeBase& kb) {
  Signature out;
  for (const auto& gci : kb.tbox) {
    collect_signature(gci.lhs, out);
    collect_signature(gci.rhs, out);
  }
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      out.individuals.insert(ca->ind);
      collect_signature(ca->expr, out);
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      out.individuals.insert(ra.src);
      out.individuals.insert(ra.tgt);
      out.roles.insert(ra.role);
    }
  }
  return out;
}

namespace {

std::string map_token(std::string_view raw, char sep, bool upper, bool cap_first) {
  std::string out;
  bool pending_sep = false;
  for (char ch : raw) {
    unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) {
      if (pending_sep && !out.empty()) out.push_back(sep);
      pending_sep = false;
      char lc = static_cast<char>(std::tolower(u));
      if (upper)
        out.push_back(static_cast<char>(std::toupper(u)));
      else if (cap_first && out.empty())
        out.push_back(static_cast<char>(std::toupper(u)));
      else
        out.push_back(lc);
    } else {
      pending_sep = true;
    }
  }
  return out;
}

}  // namespace

std::string concept_token(std::string_view raw) {
  return map_token(raw, '_', /*upper=*/true, /*cap_first=*/false);
}

std::string role_token(std::string_view raw) {
  return map_token(raw, '-', /*upper=*/false, /*cap_first=*/true);
}

std::string individual_token(std::string_view raw) {
  return map_token(raw, '_', /*upper=*/false, /*cap_first=*/false);
}

}  // namespace rte::dl
