#pragma once

#include <compare>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rte::dl {

enum class ConceptKind { Top, Bottom, Atomic, Not, And, Or, Exists, Forall };

// An atomic role name, possibly inverted. Double inversion cancels at
// construction, so Inverse only ever wraps an atomic name.
struct Role {
  std::string name;
  bool inverse = false;

  Role inverted() const { return Role{name, !inverse}; }
  auto operator<=>(const Role&) const = default;
};

// Immutable ALCI concept expression. And/Or members are flattened one
// level and duplicate-free; equality and ordering are structural.
class Concept {
 public:
  Concept();  // Top

  static Concept top();
  static Concept bottom();
  static Concept atomic(std::string name);
  static Concept negation(Concept inner);
  static Concept conjunction(std::vector<Concept> members);
  static Concept disjunction(std::vector<Concept> members);
  static Concept exists(Role role, Concept filler);
  static Concept forall(Role role, Concept filler);

  ConceptKind kind() const;
  const std::string& name() const;           // Atomic
  const Concept& operand() const;            // Not
  std::span<const Concept> members() const;  // And / Or
  const Role& role() const;                  // Exists / Forall
  const Concept& filler() const;             // Exists / Forall

  static int compare(const Concept& a, const Concept& b);
  bool operator==(const Concept& o) const { return compare(*this, o) == 0; }
  std::strong_ordering operator<=>(const Concept& o) const {
    int c = compare(*this, o);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Concept nary(ConceptKind kind, std::vector<Concept> members);
  std::shared_ptr<const Node> node_;
};

struct Individual {
  std::string name;
  auto operator<=>(const Individual&) const = default;
};

struct Gci {
  Concept lhs;
  Concept rhs;
  auto operator<=>(const Gci&) const = default;
};

struct ConceptAssertion {
  Individual ind;
  Concept expr;
  auto operator<=>(const ConceptAssertion&) const = default;
};

// Stores atomic roles only; construct through make_role_assertion to get
// inverse assertions flipped.
struct RoleAssertion {
  Individual src;
  Individual tgt;
  std::string role;
  auto operator<=>(const RoleAssertion&) const = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

RoleAssertion make_role_assertion(Individual a, Individual b, const Role& r);

struct KnowledgeBase {
  std::set<Gci> tbox;
  std::set<Assertion> abox;

  auto operator<=>(const KnowledgeBase&) const = default;
};

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<Individual> individuals;
};

// Negation normal form: Not only in front of atomic concepts.
Concept nnf(const Concept& c);

// Folds a T-Box into the single concept every tableau node must satisfy:
// the conjunction of nnf(!lhs | rhs) over all GCIs; Top when empty.
Concept internalize(const std::set<Gci>& tbox);

Signature signature(const KnowledgeBase& kb);
void collect_signature(const Concept& c, Signature& out);

// Token conventions: concepts PET_SHOP, roles Father-of, individuals s1.
std::string concept_token(std::string_view raw);
std::string role_token(std::string_view raw);
std::string individual_token(std::string_view raw);

}  // namespace rte::dl
