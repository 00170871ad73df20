#pragma once

#include <stdexcept>

#include "rte/dl.hpp"
#include "rte/tableau.hpp"

namespace rte::dl {

class InconsistentKBError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Completes the A-Box with every entailed atomic concept assertion and role
// assertion over the KB's signature, by sweeping the signature grid with
// the tableau. Non-atomic asserted concepts are kept alongside, so complex
// labels (negated events and objects) survive into the semantic graph.
// Throws InconsistentKBError when the KB has no model.
std::set<Assertion> saturate(const KnowledgeBase& kb,
                             const TableauOptions& opts = {});

}  // namespace rte::dl
