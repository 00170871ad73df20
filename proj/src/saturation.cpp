#include "rte/saturation.hpp"

namespace rte::dl {

std::set<Assertion> saturate(const KnowledgeBase& kb,
                             const TableauOptions& opts) {
  if (!is_consistent(kb, opts))
    throw InconsistentKBError("cannot saturate an inconsistent knowledge base");

  Signature sig = signature(kb);
  std::set<Assertion> out;

  for (const auto& ind : sig.individuals) {
    for (const auto& name : sig.concepts) {
      if (entails_instance(kb, ind, Concept::atomic(name), opts))
        out.insert(ConceptAssertion{ind, Concept::atomic(name)});
    }
  }
  for (const auto& a : sig.individuals) {
    for (const auto& b : sig.individuals) {
      for (const auto& role : sig.roles) {
        if (entails_relation(kb, a, b, Role{role}, opts))
          out.insert(RoleAssertion{a, b, role});
      }
    }
  }
  // complex asserted concepts are retained for label extraction
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a))
      if (ca->expr.kind() != ConceptKind::Atomic) out.insert(a);
  }
  return out;
}

}  // namespace rte::dl
