#include "rte/tableau.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <tuple>
#include <vector>

#include "rte/dl_text.hpp"

namespace rte::dl {

namespace {

struct TNode {
  std::set<Concept> label;  // all in NNF
  bool named;
};

struct TGraph {
  std::vector<TNode> nodes;
  std::set<std::tuple<int, int, std::string>> edges;  // (src, tgt, role)
};

void trace_rule(const TableauOptions& o, const char* rule, int node,
                const Concept& c) {
  if (o.trace) *o.trace << rule << "  n" << node << "  " << to_text(c) << '\n';
}

bool has_clash(const TGraph& g) {
  for (const auto& n : g.nodes) {
    for (const auto& c : n.label) {
      if (c.kind() == ConceptKind::Bottom) return true;
      if (c.kind() == ConceptKind::Not &&
          n.label.count(c.operand()))  // operand is atomic in NNF
        return true;
    }
  }
  return false;
}

// r-neighbours of x, both edge directions, respecting inverse roles
std::vector<int> neighbours(const TGraph& g, int x, const Role& r) {
  std::vector<int> out;
  for (const auto& [src, tgt, name] : g.edges) {
    if (name != r.name) continue;
    if (!r.inverse && src == x) out.push_back(tgt);
    if (r.inverse && tgt == x) out.push_back(src);
  }
  return out;
}

// Equality blocking: an anonymous node is blocked when an earlier
// unblocked node carries an identical label set. Named nodes never block.
std::vector<bool> blocked_nodes(const TGraph& g) {
  std::vector<bool> blocked(g.nodes.size(), false);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].named) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (!blocked[j] && g.nodes[j].label == g.nodes[i].label) {
        blocked[i] = true;
        break;
      }
    }
  }
  return blocked;
}

bool apply_and(TGraph& g, const TableauOptions& o) {
  bool changed = false;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& c : g.nodes[i].label) {
        if (c.kind() != ConceptKind::And) continue;
        std::vector<Concept> missing;
        for (const auto& m : c.members())
          if (!g.nodes[i].label.count(m)) missing.push_back(m);
        if (!missing.empty()) {
          trace_rule(o, "AND   ", static_cast<int>(i), c);
          for (auto& m : missing) g.nodes[i].label.insert(std::move(m));
          changed = grew = true;
          break;  // label changed, restart iteration
        }
      }
    }
  }
  return changed;
}

struct OrPick {
  int node;
  Concept disj;
};

std::optional<OrPick> find_or(const TGraph& g) {
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& c : g.nodes[i].label) {
      if (c.kind() != ConceptKind::Or) continue;
      bool satisfied = false;
      for (const auto& m : c.members())
        if (g.nodes[i].label.count(m)) {
          satisfied = true;
          break;
        }
      if (!satisfied) return OrPick{static_cast<int>(i), c};
    }
  }
  return std::nullopt;
}

bool apply_exists(TGraph& g, const Concept& tbox_concept,
                  const TableauOptions& o) {
  auto blocked = blocked_nodes(g);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (blocked[i]) continue;
    for (const auto& c : g.nodes[i].label) {
      if (c.kind() != ConceptKind::Exists) continue;
      bool witnessed = false;
      for (int y : neighbours(g, static_cast<int>(i), c.role()))
        if (g.nodes[y].label.count(c.filler())) {
          witnessed = true;
          break;
        }
      if (witnessed) continue;
      if (g.nodes.size() >= o.max_nodes)
        throw ResourceLimitError("tableau node limit exceeded");
      trace_rule(o, "EXISTS", static_cast<int>(i), c);
      int fresh = static_cast<int>(g.nodes.size());
      g.nodes.push_back(TNode{{c.filler(), tbox_concept}, false});
      if (c.role().inverse)
        g.edges.insert({fresh, static_cast<int>(i), c.role().name});
      else
        g.edges.insert({static_cast<int>(i), fresh, c.role().name});
      return true;
    }
  }
  return false;
}

bool apply_forall(TGraph& g, const TableauOptions& o) {
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& c : g.nodes[i].label) {
      if (c.kind() != ConceptKind::Forall) continue;
      for (int y : neighbours(g, static_cast<int>(i), c.role())) {
        if (!g.nodes[y].label.count(c.filler())) {
          trace_rule(o, "FORALL", static_cast<int>(i), c);
          g.nodes[y].label.insert(c.filler());
          return true;
        }
      }
    }
  }
  return false;
}

// Labels and edges only grow within a branch, so any clash reachable by the
// deterministic rules (&, forall) alone is inevitable: prune such branches
// before exploring their disjunctions.
bool doomed(const TGraph& g) {
  TGraph scratch = g;
  TableauOptions quiet;
  for (;;) {
    if (has_clash(scratch)) return true;
    if (apply_and(scratch, quiet)) continue;
    if (apply_forall(scratch, quiet)) continue;
    return false;
  }
}

bool expand(TGraph g, const Concept& tbox_concept, const TableauOptions& o) {
  for (;;) {
    if (doomed(g)) return false;
    if (apply_and(g, o)) continue;
    if (auto pick = find_or(g)) {
      const auto& label = g.nodes[pick->node].label;
      for (const auto& d : pick->disj.members()) {
        // a label holding both d and its complement can never complete
        // clash-free, so the branch is skipped
        if (label.count(nnf(Concept::negation(d)))) continue;
        TGraph branch = g;
        trace_rule(o, "OR    ", pick->node, d);
        branch.nodes[pick->node].label.insert(d);
        if (expand(std::move(branch), tbox_concept, o)) return true;
      }
      return false;
    }
    if (apply_exists(g, tbox_concept, o)) continue;
    if (apply_forall(g, o)) continue;
    return true;
  }
}

}  // namespace

bool is_consistent(const KnowledgeBase& kb, const TableauOptions& opts) {
  Concept tbox_concept = internalize(kb.tbox);
  TGraph g;
  std::map<Individual, int> index;
  auto node_of = [&](const Individual& ind) {
    auto it = index.find(ind);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back(TNode{{tbox_concept}, true});
    index.emplace(ind, id);
    return id;
  };
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      g.nodes[node_of(ca->ind)].label.insert(nnf(ca->expr));
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      g.edges.insert({node_of(ra.src), node_of(ra.tgt), ra.role});
    }
  }
  // empty A-Box: interpretation domains are non-empty, so test one element
  if (g.nodes.empty()) g.nodes.push_back(TNode{{tbox_concept}, false});
  return expand(std::move(g), tbox_concept, opts);
}

bool entails_instance(const KnowledgeBase& kb, const Individual& a,
                      const Concept& c, const TableauOptions& opts) {
  KnowledgeBase refuted = kb;
  refuted.abox.insert(ConceptAssertion{a, nnf(Concept::negation(c))});
  return !is_consistent(refuted, opts);
}

bool entails_relation(const KnowledgeBase& kb, const Individual& a,
                      const Individual& b, const Role& r,
                      const TableauOptions& opts) {
  Assertion normalized = make_role_assertion(a, b, r);
  if (kb.abox.count(normalized)) return true;
  return !is_consistent(kb, opts);
}

bool is_subsumed(const std::set<Gci>& tbox, const Concept& c, const Concept& d,
                 const TableauOptions& opts) {
  KnowledgeBase kb;
  kb.tbox = tbox;
  kb.abox.insert(ConceptAssertion{
      Individual{"x"},
      Concept::conjunction({c, nnf(Concept::negation(d))})});
  return !is_consistent(kb, opts);
}

}  // namespace rte::dl
