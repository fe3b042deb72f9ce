#pragma once

#include <functional>

#include "nsalg/magma.hpp"
#include "nsalg/subset_ops.hpp"

namespace nsalg {

enum class ComponentKind { group, semigroup, loop, la_semigroup };

ComponentKind component_kind_from_string(const std::string& s);
const char* to_string(ComponentKind k);

// Disjoint union of component magmas; order is the sum of component orders.
class NStructure {
 public:
  struct Component {
    MagmaPtr magma;
    ComponentKind kind;
    bool neutrosophic;
  };

  NStructure(std::string name, std::vector<Component> components);

  const std::string& name() const { return name_; }
  int count() const { return static_cast<int>(components_.size()); }
  const Component& component(int i) const { return components_.at(i); }
  const std::vector<Component>& components() const { return components_; }
  bool strong() const;  // every component flagged neutrosophic

 private:
  std::string name_;
  std::vector<Component> components_;
};

using NStructPtr = std::shared_ptr<const NStructure>;

// One subset per component, addressed positionally.
struct NSubset {
  NStructPtr structure;
  std::vector<Subset> parts;

  int total_size() const;
  bool all_parts_empty() const;
};

NStructPtr make_n_structure(std::string name, std::vector<NStructure::Component> components);

int n_order(const NStructure& s);

enum class SubNStrength { plain, neutrosophic, strong };

// Every part passes its component kind's substructure test; neutrosophic
// strength needs one part with an indeterminate element, strong needs every
// part strong under classify_subset.
bool is_sub_n_structure(const NSubset& p, SubNStrength strength);

bool is_lagrange_sub_n(const NSubset& p, SubNStrength strength = SubNStrength::plain);

bool is_normal_sub_n(const NSubset& p, NormalMode mode = NormalMode::classical);

bool are_conjugate_sub_n(const NSubset& p, const NSubset& q, ConjMode mode = ConjMode::classical);
std::vector<bool> conjugate_parts(const NSubset& p, const NSubset& q, ConjMode mode);

// Parts are two-sided ideals of their components (on top of the plain
// sub-N test).
bool is_n_ideal(const NSubset& p);

void require_over(const NStructure& s, const NSubset& p);

// NSTR text format:
//   nstructure <name>
//   component <magma-name> kind <kind> neutrosophic <yes|no>   (N lines, N >= 2)
//   end
// Component magmas are resolved by name through the supplied loader.
NStructPtr parse_nstructure(const std::string& text,
                            const std::function<MagmaPtr(const std::string&)>& resolve);

}  // namespace nsalg
