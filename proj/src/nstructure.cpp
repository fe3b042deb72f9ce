#include "nsalg/nstructure.hpp"

#include <numeric>
#include <sstream>

#include "nsalg/neutro.hpp"

namespace nsalg {

ComponentKind component_kind_from_string(const std::string& s) {
  if (s == "group") return ComponentKind::group;
  if (s == "semigroup") return ComponentKind::semigroup;
  if (s == "loop") return ComponentKind::loop;
  if (s == "la_semigroup" || s == "la-semigroup") return ComponentKind::la_semigroup;
  fail(Err::ParseError, "unknown component kind '" + s + "'");
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::group: return "group";
    case ComponentKind::semigroup: return "semigroup";
    case ComponentKind::loop: return "loop";
    case ComponentKind::la_semigroup: return "la_semigroup";
  }
  return "?";
}

namespace {

bool plain_kind_consistent(const FiniteMagma& m, ComponentKind kind) {
  const AxiomProfile& p = m.profile();
  switch (kind) {
    case ComponentKind::group: return p.is_group;
    case ComponentKind::semigroup: return p.associative;
    case ComponentKind::loop: return p.is_loop;
    case ComponentKind::la_semigroup: return p.left_invertive;
  }
  return false;
}

// A component flagged neutrosophic may satisfy its kind's axioms only on
// the real block: an adjoined loop is never a Latin square on the doubled
// carrier, yet it is exactly what a neutrosophic loop component is.
bool kind_consistent(const FiniteMagma& m, ComponentKind kind, bool neutrosophic) {
  if (plain_kind_consistent(m, kind)) return true;
  if (!neutrosophic || !m.is_neutrosophic()) return false;
  const NeutroInfo& info = m.neutro();
  std::vector<int> block;
  for (int i = 0; i < m.order(); ++i)
    if (info.indet[i] == 0) block.push_back(i);
  if (block.empty()) return false;
  for (int i : block)
    for (int j : block)
      if (info.indet[m.at(i, j)] != 0) return false;

  const int k = static_cast<int>(block.size());
  std::vector<int32_t> table;
  table.reserve(static_cast<size_t>(k) * k);
  std::vector<int> pos(m.order(), -1);
  for (int i = 0; i < k; ++i) pos[block[i]] = i;
  std::vector<std::string> labels;
  for (int i : block) labels.push_back(m.label(i));
  for (int i : block)
    for (int j : block) table.push_back(pos[m.at(i, j)]);
  FiniteMagma real_block("block", std::move(labels), std::move(table));
  return plain_kind_consistent(real_block, kind);
}

}  // namespace

NStructure::NStructure(std::string name, std::vector<Component> components)
    : name_(std::move(name)), components_(std::move(components)) {
  if (components_.size() < 2)
    fail(Err::ShapeError, "structure '" + name_ + "' needs at least 2 components");
  for (const auto& c : components_) {
    if (!kind_consistent(*c.magma, c.kind, c.neutrosophic))
      fail(Err::KindMismatch, "component '" + c.magma->name() + "' of '" + name_ +
                                  "' fails the " + to_string(c.kind) + " axioms");
  }
}

bool NStructure::strong() const {
  for (const auto& c : components_)
    if (!c.neutrosophic) return false;
  return true;
}

NStructPtr make_n_structure(std::string name, std::vector<NStructure::Component> components) {
  return std::make_shared<NStructure>(std::move(name), std::move(components));
}

int n_order(const NStructure& s) {
  int total = 0;
  for (const auto& c : s.components()) total += c.magma->order();
  return total;
}

int NSubset::total_size() const {
  int total = 0;
  for (const auto& p : parts) total += p.count();
  return total;
}

bool NSubset::all_parts_empty() const {
  for (const auto& p : parts)
    if (!p.empty()) return false;
  return true;
}

void require_over(const NStructure& s, const NSubset& p) {
  if (p.structure.get() != &s || static_cast<int>(p.parts.size()) != s.count())
    fail(Err::UniverseMismatch, "subset is not over structure '" + s.name() + "'");
  for (int i = 0; i < s.count(); ++i)
    if (p.parts[i].universe.get() != s.component(i).magma.get())
      fail(Err::UniverseMismatch, "part " + std::to_string(i) + " is over the wrong component");
}

namespace {

bool part_passes_kind(const Subset& part, const NStructure::Component& comp) {
  switch (comp.kind) {
    case ComponentKind::group:
      if (is_subgroup(part)) return true;
      // A neutrosophic group component accepts the looser reading: closed
      // and containing a group, since the indeterminate has no inverse.
      return comp.neutrosophic && is_closed(part) && contains_proper_group(part);
    case ComponentKind::semigroup: return is_closed(part);
    case ComponentKind::loop: return is_subloop_neutro(part);
    case ComponentKind::la_semigroup: return is_closed(part);
  }
  return false;
}

}  // namespace

bool is_sub_n_structure(const NSubset& p, SubNStrength strength) {
  const NStructure& s = *p.structure;
  require_over(s, p);
  for (const auto& part : p.parts)
    if (part.empty()) fail(Err::EmptyPart, "every part of a sub-N-structure must be nonempty");

  for (int i = 0; i < s.count(); ++i)
    if (!part_passes_kind(p.parts[i], s.component(i))) return false;

  if (strength == SubNStrength::plain) return true;

  bool any_neutro = false;
  bool all_strong = true;
  for (int i = 0; i < s.count(); ++i) {
    const auto& comp = s.component(i);
    if (!comp.neutrosophic || !comp.magma->is_neutrosophic()) {
      all_strong = false;
      continue;
    }
    NeutroClass cls = classify_subset(p.parts[i]);
    any_neutro = any_neutro || cls.contains_neutrosophic;
    all_strong = all_strong && cls.strong && cls.contains_neutrosophic;
  }
  if (strength == SubNStrength::neutrosophic) return any_neutro;
  return all_strong;
}

bool is_lagrange_sub_n(const NSubset& p, SubNStrength strength) {
  if (!is_sub_n_structure(p, strength))
    fail(Err::NotASubNStructure, "Lagrange test requires a sub-N-structure");
  const int size = p.total_size();
  return size > 0 && n_order(*p.structure) % size == 0;
}

bool is_normal_sub_n(const NSubset& p, NormalMode mode) {
  if (!is_sub_n_structure(p, SubNStrength::plain))
    fail(Err::NotASubNStructure, "normality requires a sub-N-structure");
  for (const auto& part : p.parts)
    if (!is_normal_subgroup(part, mode)) return false;
  return true;
}

std::vector<bool> conjugate_parts(const NSubset& p, const NSubset& q, ConjMode mode) {
  if (p.structure.get() != q.structure.get())
    fail(Err::UniverseMismatch, "conjugacy across different structures");
  // The complementary reading is a closure condition on raw sets; only the
  // classical one needs actual sub-N-structures on both sides.
  if (mode == ConjMode::classical &&
      (!is_sub_n_structure(p, SubNStrength::plain) || !is_sub_n_structure(q, SubNStrength::plain)))
    fail(Err::NotASubNStructure, "classical conjugacy requires sub-N-structures");
  std::vector<bool> out;
  out.reserve(p.parts.size());
  for (size_t i = 0; i < p.parts.size(); ++i)
    out.push_back(are_conjugate(p.parts[i], q.parts[i], mode));
  return out;
}

bool are_conjugate_sub_n(const NSubset& p, const NSubset& q, ConjMode mode) {
  auto parts = conjugate_parts(p, q, mode);
  for (bool b : parts)
    if (!b) return false;
  return true;
}

bool is_n_ideal(const NSubset& p) {
  if (!is_sub_n_structure(p, SubNStrength::plain)) return false;
  for (const auto& part : p.parts)
    if (!is_ideal(part, IdealSide::two_sided)) return false;
  return true;
}

NStructPtr parse_nstructure(const std::string& text,
                            const std::function<MagmaPtr(const std::string&)>& resolve) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  std::vector<NStructure::Component> components;
  bool saw_header = false, saw_end = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "nstructure")
        fail(Err::ParseError, "expected 'nstructure <name>' header");
      name = toks[1];
      saw_header = true;
      continue;
    }
    if (toks[0] == "end") {
      saw_end = true;
      break;
    }
    if (toks.size() != 6 || toks[0] != "component" || toks[2] != "kind" ||
        toks[4] != "neutrosophic")
      fail(Err::ParseError, "expected 'component <magma> kind <kind> neutrosophic <yes|no>'");
    bool neutro;
    if (toks[5] == "yes") neutro = true;
    else if (toks[5] == "no") neutro = false;
    else fail(Err::ParseError, "neutrosophic flag must be yes or no");
    components.push_back({resolve(toks[1]), component_kind_from_string(toks[3]), neutro});
  }
  if (!saw_header || !saw_end) fail(Err::ParseError, "truncated nstructure file");
  return make_n_structure(name, std::move(components));
}

}  // namespace nsalg
