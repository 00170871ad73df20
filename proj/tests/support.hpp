#pragma once

// Shared random-instance generators and brute-force oracles used by the
// randomized suites and the acceptance checks.

#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rte/dl.hpp"
#include "rte/semgraph.hpp"

namespace testsupport {

namespace dl = rte::dl;

// ---- random quantifier-free KBs + propositional oracle -------------------

inline dl::Concept random_literal(std::mt19937& rng, int num_atoms) {
  dl::Concept a =
      dl::Concept::atomic("C" + std::to_string(rng() % num_atoms));
  return rng() % 2 ? dl::Concept::negation(a) : a;
}

inline dl::Concept random_boolean(std::mt19937& rng, int num_atoms,
                                  int depth) {
  if (depth == 0) return random_literal(rng, num_atoms);
  switch (rng() % 4) {
    case 0:
      return random_literal(rng, num_atoms);
    case 1:
      return dl::Concept::negation(random_boolean(rng, num_atoms, depth - 1));
    case 2:
      return dl::Concept::conjunction(
          {random_boolean(rng, num_atoms, depth - 1),
           random_boolean(rng, num_atoms, depth - 1)});
    default:
      return dl::Concept::disjunction(
          {random_boolean(rng, num_atoms, depth - 1),
           random_boolean(rng, num_atoms, depth - 1)});
  }
}

// individuals a0..a<k>, atoms C0..C<n>, literal GCIs, boolean assertions
inline dl::KnowledgeBase random_prop_kb(std::mt19937& rng, int num_atoms = 4,
                                        int num_inds = 4, int max_gcis = 4,
                                        int max_assertions = 5) {
  dl::KnowledgeBase kb;
  int gcis = static_cast<int>(rng() % (max_gcis + 1));
  for (int i = 0; i < gcis; ++i)
    kb.tbox.insert(
        {random_literal(rng, num_atoms), random_literal(rng, num_atoms)});
  int assertions = 1 + static_cast<int>(rng() % max_assertions);
  for (int i = 0; i < assertions; ++i) {
    dl::Individual ind{"a" + std::to_string(rng() % num_inds)};
    kb.abox.insert(
        dl::ConceptAssertion{ind, random_boolean(rng, num_atoms, 2)});
  }
  return kb;
}

// truth of a quantifier-free concept under an assignment where bit k of
// `mask` gives atom C<k>
inline bool eval_concept(const dl::Concept& c, unsigned mask) {
  switch (c.kind()) {
    case dl::ConceptKind::Top:
      return true;
    case dl::ConceptKind::Bottom:
      return false;
    case dl::ConceptKind::Atomic: {
      int bit = std::stoi(c.name().substr(1));
      return (mask >> bit) & 1u;
    }
    case dl::ConceptKind::Not:
      return !eval_concept(c.operand(), mask);
    case dl::ConceptKind::And:
      for (const auto& m : c.members())
        if (!eval_concept(m, mask)) return false;
      return true;
    case dl::ConceptKind::Or:
      for (const auto& m : c.members())
        if (eval_concept(m, mask)) return true;
      return false;
    default:
      throw std::logic_error("oracle handles quantifier-free concepts only");
  }
}

// Brute-force consistency of a quantifier-free KB: every domain element
// must satisfy all GCIs, each individual additionally its assertions.
inline bool prop_consistent(const dl::KnowledgeBase& kb, int num_atoms = 4) {
  const unsigned masks = 1u << num_atoms;
  std::vector<unsigned> legal;
  for (unsigned m = 0; m < masks; ++m) {
    bool ok = true;
    for (const auto& g : kb.tbox)
      if (eval_concept(g.lhs, m) && !eval_concept(g.rhs, m)) {
        ok = false;
        break;
      }
    if (ok) legal.push_back(m);
  }
  if (legal.empty()) return false;  // domains are non-empty

  std::map<dl::Individual, std::vector<dl::Concept>> per_ind;
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<dl::ConceptAssertion>(&a))
      per_ind[ca->ind].push_back(ca->expr);
    else {
      const auto& ra = std::get<dl::RoleAssertion>(a);
      per_ind[ra.src];
      per_ind[ra.tgt];
    }
  }
  for (const auto& [ind, exprs] : per_ind) {
    bool found = false;
    for (unsigned m : legal) {
      bool ok = true;
      for (const auto& e : exprs)
        if (!eval_concept(e, m)) {
          ok = false;
          break;
        }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// ---- random semantic graphs + exhaustive mapping oracle ------------------

inline rte::semgraph::SemGraph random_graph(std::mt19937& rng, int max_nodes,
                                            int atom_pool = 4,
                                            int max_atoms_per_label = 3) {
  rte::semgraph::SemGraph g;
  int n = 1 + static_cast<int>(rng() % max_nodes);
  std::vector<dl::Individual> inds;
  for (int i = 0; i < n; ++i) {
    dl::Individual ind{"n" + std::to_string(i)};
    auto& label = g.nodes[ind];
    int atoms = static_cast<int>(rng() % (max_atoms_per_label + 1));
    for (int k = 0; k < atoms; ++k)
      label.atoms.insert("A" + std::to_string(rng() % atom_pool));
    inds.push_back(ind);
  }
  int edges = static_cast<int>(rng() % (2 * n));
  const char* roles[] = {"R", "S"};
  for (int k = 0; k < edges; ++k)
    g.edges.insert({inds[rng() % n], inds[rng() % n], roles[rng() % 2]});
  return g;
}

// enumerate every total mapping hypothesis -> text and test it directly
inline bool subgraph_oracle(const rte::semgraph::SemGraph& gt,
                            const rte::semgraph::SemGraph& gh) {
  std::vector<dl::Individual> hn, tn;
  for (const auto& [i, l] : gh.nodes) hn.push_back(i);
  for (const auto& [i, l] : gt.nodes) tn.push_back(i);
  if (hn.empty()) return true;
  if (tn.empty()) return false;

  std::vector<std::size_t> pick(hn.size(), 0);
  for (;;) {
    std::map<dl::Individual, dl::Individual> f;
    for (std::size_t i = 0; i < hn.size(); ++i) f[hn[i]] = tn[pick[i]];
    bool ok = true;
    for (std::size_t i = 0; ok && i < hn.size(); ++i) {
      const auto& la = gh.nodes.at(hn[i]).atoms;
      const auto& lb = gt.nodes.at(f[hn[i]]).atoms;
      ok = std::includes(lb.begin(), lb.end(), la.begin(), la.end());
    }
    for (const auto& [src, tgt, role] : gh.edges) {
      if (!ok) break;
      ok = gt.edges.count({f[src], f[tgt], role}) > 0;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == tn.size()) pick[i++] = 0;
    if (i == pick.size()) return false;
  }
}

}  // namespace testsupport
