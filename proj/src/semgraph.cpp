#include "rte/semgraph.hpp"

#include <algorithm>
#include <sstream>

#include "rte/dl_text.hpp"

namespace rte::semgraph {

Concept NodeLabel::label_concept() const {
  std::vector<Concept> parts;
  for (const auto& a : atoms) parts.push_back(Concept::atomic(a));
  for (const auto& c : complexes) parts.push_back(c);
  return Concept::conjunction(std::move(parts));
}

SemGraph abox_to_graph(const std::set<Assertion>& assertions) {
  SemGraph g;
  for (const auto& a : assertions) {
    if (const auto* ca = std::get_if<dl::ConceptAssertion>(&a)) {
      auto& label = g.nodes[ca->ind];
      if (ca->expr.kind() == dl::ConceptKind::Atomic)
        label.atoms.insert(ca->expr.name());
      else
        label.complexes.insert(ca->expr);
    } else {
      const auto& ra = std::get<dl::RoleAssertion>(a);
      g.nodes[ra.src];
      g.nodes[ra.tgt];
      g.edges.insert({ra.src, ra.tgt, ra.role});
    }
  }
  return g;
}

std::map<Individual, std::vector<Individual>> node_candidates(
    const SemGraph& gt, const SemGraph& gh, const std::set<Gci>& tbox,
    const dl::TableauOptions& opts) {
  std::map<Individual, std::vector<Individual>> out;
  for (const auto& [nh, lh] : gh.nodes) {
    auto& cands = out[nh];
    for (const auto& [nt, lt] : gt.nodes) {
      bool ok;
      if (lh.atomic_only() && lt.atomic_only()) {
        ok = std::includes(lt.atoms.begin(), lt.atoms.end(), lh.atoms.begin(),
                           lh.atoms.end());
      } else {
        ok = dl::is_subsumed(tbox, lt.label_concept(), lh.label_concept(),
                             opts);
      }
      if (ok) cands.push_back(nt);
    }
  }
  return out;
}

namespace {

bool arcs_ok(const SemGraph& gt, const SemGraph& gh,
             const std::map<Individual, Individual>& mapping) {
  for (const auto& [src, tgt, role] : gh.edges) {
    auto s = mapping.find(src);
    auto t = mapping.find(tgt);
    if (s == mapping.end() || t == mapping.end()) continue;  // not yet mapped
    if (!gt.edges.count({s->second, t->second, role})) return false;
  }
  return true;
}

bool image_taken(const std::map<Individual, Individual>& mapping,
                 const Individual& img) {
  for (const auto& [h, t] : mapping)
    if (t == img) return true;
  return false;
}

struct Search {
  const SemGraph& gt;
  const SemGraph& gh;
  const std::map<Individual, std::vector<Individual>>& cands;
  const std::vector<Individual>& open;
  bool injective;
  MatchWitness witness;

  bool run(std::size_t k) {
    if (k == open.size()) return true;
    const Individual& nh = open[k];
    for (const Individual& nt : cands.at(nh)) {
      if (injective && image_taken(witness.mapping, nt)) continue;
      witness.mapping[nh] = nt;
      if (arcs_ok(gt, gh, witness.mapping) && run(k + 1)) return true;
      witness.mapping.erase(nh);
    }
    return false;
  }
};

}  // namespace

std::optional<MatchWitness> detect_subgraph(const SemGraph& gt,
                                            const SemGraph& gh,
                                            const std::set<Gci>& tbox,
                                            const MatchOptions& opts) {
  auto cands = node_candidates(gt, gh, tbox, opts.reasoner);

  MatchWitness fixed;
  std::vector<Individual> open;  // multi-candidate nodes, backtracked over
  for (const auto& [nh, cs] : cands) {
    if (cs.empty()) return std::nullopt;  // no correspondence for this node
    if (cs.size() == 1)
      fixed.mapping[nh] = cs.front();
    else
      open.push_back(nh);
  }
  if (opts.injective) {
    std::set<Individual> images;
    for (const auto& [h, t] : fixed.mapping)
      if (!images.insert(t).second) return std::nullopt;
  }
  if (!arcs_ok(gt, gh, fixed.mapping)) return std::nullopt;

  Search search{gt, gh, cands, open, opts.injective, std::move(fixed)};
  if (!search.run(0)) return std::nullopt;
  return std::move(search.witness);
}

bool validate_witness(const SemGraph& gt, const SemGraph& gh,
                      const std::set<Gci>& tbox, const MatchWitness& w,
                      const dl::TableauOptions& opts) {
  for (const auto& [nh, lh] : gh.nodes) {
    auto it = w.mapping.find(nh);
    if (it == w.mapping.end()) return false;
    auto nt = gt.nodes.find(it->second);
    if (nt == gt.nodes.end()) return false;
    if (!dl::is_subsumed(tbox, nt->second.label_concept(), lh.label_concept(),
                         opts))
      return false;
  }
  for (const auto& [src, tgt, role] : gh.edges) {
    if (!gt.edges.count({w.mapping.at(src), w.mapping.at(tgt), role}))
      return false;
  }
  return true;
}

std::string dump_graph(const SemGraph& g) {
  std::ostringstream os;
  for (const auto& [ind, label] : g.nodes) {
    os << ind.name << " : ";
    bool first = true;
    for (const auto& a : label.atoms) {
      if (!first) os << ',';
      first = false;
      os << a;
    }
    if (!label.complexes.empty()) {
      os << " | ";
      first = true;
      for (const auto& c : label.complexes) {
        if (!first) os << ';';
        first = false;
        os << dl::to_text(c);
      }
    }
    os << '\n';
  }
  for (const auto& [src, tgt, role] : g.edges)
    os << src.name << " -" << role << "-> " << tgt.name << '\n';
  return os.str();
}

}  // namespace rte::semgraph
