#pragma once

#include <iosfwd>
#include <stdexcept>

#include "rte/dl.hpp"

namespace rte::dl {

struct TableauOptions {
  // Hard cap on completion-graph nodes; blocking already guarantees
  // termination, the cap guards against surprises.
  std::size_t max_nodes = 10000;
  // When set, every rule application is logged (rule, node, concept).
  std::ostream* trace = nullptr;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Completion-graph tableau for ALCI with equality blocking. Rule order is
// fixed (conjunction, disjunction, existential, universal; nodes in
// creation order; disjuncts left to right), so results and traces are
// reproducible.
bool is_consistent(const KnowledgeBase& kb, const TableauOptions& opts = {});

// kb |= a : c, decided by refutation.
bool entails_instance(const KnowledgeBase& kb, const Individual& a,
                      const Concept& c, const TableauOptions& opts = {});

// kb |= (a,b) : r. Without role axioms ALCI never entails a role atom
// between named individuals beyond the (inverse-normalized) asserted ones,
// so this is membership modulo inverse, plus the inconsistent-KB case.
bool entails_relation(const KnowledgeBase& kb, const Individual& a,
                      const Individual& b, const Role& r,
                      const TableauOptions& opts = {});

// tbox |= c => d, via unsatisfiability of c & !d.
bool is_subsumed(const std::set<Gci>& tbox, const Concept& c, const Concept& d,
                 const TableauOptions& opts = {});

}  // namespace rte::dl
