#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "rte/dl.hpp"
#include "rte/tableau.hpp"

namespace rte::semgraph {

using dl::Assertion;
using dl::Concept;
using dl::Gci;
using dl::Individual;

// Node label of a semantic graph: atomic concepts collected by saturation
// plus the complex concepts asserted on the individual. The effective
// label is the conjunction of all of them (top when empty).
struct NodeLabel {
  std::set<std::string> atoms;
  std::set<Concept> complexes;

  Concept label_concept() const;
  bool atomic_only() const { return complexes.empty(); }
  auto operator<=>(const NodeLabel&) const = default;
};

struct SemGraph {
  std::map<Individual, NodeLabel> nodes;
  std::set<std::tuple<Individual, Individual, std::string>> edges;
};

SemGraph abox_to_graph(const std::set<Assertion>& assertions);

// Text nodes whose label is at least as specific as the hypothesis node's,
// per hypothesis node, in lexicographic order. With purely atomic labels
// this reduces to an atom-subset test thanks to saturation.
std::map<Individual, std::vector<Individual>> node_candidates(
    const SemGraph& gt, const SemGraph& gh, const std::set<Gci>& tbox,
    const dl::TableauOptions& opts = {});

struct MatchWitness {
  std::map<Individual, Individual> mapping;  // hypothesis -> text
};

struct MatchOptions {
  // The mapping is a homomorphism by default; strict mode additionally
  // forbids two hypothesis nodes sharing an image.
  bool injective = false;
  dl::TableauOptions reasoner;
};

// Maps the hypothesis graph into the text graph: node checking via label
// subsumption, arc checking via edge lookup, with depth-first backtracking
// over multi-candidate nodes. Returns the first witness in deterministic
// order, or nothing.
std::optional<MatchWitness> detect_subgraph(const SemGraph& gt,
                                            const SemGraph& gh,
                                            const std::set<Gci>& tbox,
                                            const MatchOptions& opts = {});

// Re-checks a witness independently of the search: totality, the node
// condition and the arc condition.
bool validate_witness(const SemGraph& gt, const SemGraph& gh,
                      const std::set<Gci>& tbox, const MatchWitness& w,
                      const dl::TableauOptions& opts = {});

// One line per node (`name : atom,atom | complex;complex`) and per edge
// (`src -role-> tgt`).
std::string dump_graph(const SemGraph& g);

}  // namespace rte::semgraph
