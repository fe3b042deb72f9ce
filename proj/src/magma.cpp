#include "nsalg/magma.hpp"

#include <algorithm>
#include <cassert>

namespace nsalg {

const char* to_string(Err code) {
  switch (code) {
    case Err::UnknownElement: return "UnknownElement";
    case Err::ShapeError: return "ShapeError";
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::UniverseMismatch: return "UniverseMismatch";
    case Err::NotContained: return "NotContained";
    case Err::NotASubgroup: return "NotASubgroup";
    case Err::SizeOverflow: return "SizeOverflow";
    case Err::NotNeutrosophicUniverse: return "NotNeutrosophicUniverse";
    case Err::EmptyImage: return "EmptyImage";
    case Err::DuplicateParameter: return "DuplicateParameter";
    case Err::ParameterMismatch: return "ParameterMismatch";
    case Err::DisjointParameters: return "DisjointParameters";
    case Err::UnknownPredicate: return "UnknownPredicate";
    case Err::TooFewParameters: return "TooFewParameters";
    case Err::KindMismatch: return "KindMismatch";
    case Err::EmptyPart: return "EmptyPart";
    case Err::NotASubNStructure: return "NotASubNStructure";
    case Err::BadParams: return "BadParams";
    case Err::ConstructionInvariantBroken: return "ConstructionInvariantBroken";
    case Err::TooLarge: return "TooLarge";
    case Err::CorpusCorrupt: return "CorpusCorrupt";
    case Err::ClaimError: return "ClaimError";
    case Err::UnknownClaim: return "UnknownClaim";
    case Err::NoIdentity: return "NoIdentity";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "Error";
}

FiniteMagma::FiniteMagma(std::string name, std::vector<std::string> labels,
                         std::vector<int32_t> table, std::optional<NeutroInfo> neutro)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)),
      neutro_(std::move(neutro)) {
  const size_t n = labels_.size();
  if (n == 0) fail(Err::ShapeError, "magma '" + name_ + "' has an empty carrier");
  if (n > static_cast<size_t>(kCarrierCap))
    fail(Err::SizeOverflow, "magma '" + name_ + "' exceeds the carrier cap");
  if (table_.size() != n * n)
    fail(Err::ShapeError, "magma '" + name_ + "' table is not " + std::to_string(n) + "x" +
                              std::to_string(n));
  for (size_t i = 0; i < n; ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!inserted) fail(Err::DuplicateLabel, "label '" + labels_[i] + "' in magma '" + name_ + "'");
  }
  for (int32_t v : table_) {
    if (v < 0 || static_cast<size_t>(v) >= n)
      fail(Err::IndexOutOfRange, "table entry out of carrier in magma '" + name_ + "'");
  }
  if (neutro_) {
    if (neutro_->real.size() != n || neutro_->indet.size() != n)
      fail(Err::ShapeError, "neutrosophic metadata size mismatch in magma '" + name_ + "'");
  }
}

std::optional<int> FiniteMagma::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteMagma::require_index(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) fail(Err::UnknownElement, "'" + label + "' is not in magma '" + name_ + "'");
  return *idx;
}

const NeutroInfo& FiniteMagma::neutro() const {
  if (!neutro_)
    fail(Err::NotNeutrosophicUniverse, "magma '" + name_ + "' carries no neutrosophic metadata");
  return *neutro_;
}

namespace {

bool rows_and_columns_are_permutations(const FiniteMagma& m) {
  const int n = m.order();
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    const int32_t* r = m.row(x);
    for (int y = 0; y < n; ++y) {
      if (seen[r[y]]) return false;
      seen[r[y]] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      int v = m.at(x, y);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool check_associative(const FiniteMagma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = m.at(x, y);
      for (int z = 0; z < n; ++z)
        if (m.at(xy, z) != m.at(x, m.at(y, z))) return false;
    }
  return true;
}

bool check_commutative(const FiniteMagma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (m.at(x, y) != m.at(y, x)) return false;
  return true;
}

bool check_left_invertive(const FiniteMagma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = m.at(x, y);
      for (int z = 0; z < n; ++z)
        if (m.at(xy, z) != m.at(m.at(z, y), x)) return false;
    }
  return true;
}

bool check_medial(const FiniteMagma& m) {
  const int n = m.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = m.at(a, b);
      for (int c = 0; c < n; ++c) {
        const int ac = m.at(a, c);
        for (int d = 0; d < n; ++d)
          if (m.at(ab, m.at(c, d)) != m.at(ac, m.at(b, d))) return false;
      }
    }
  return true;
}

}  // namespace

AxiomProfile compute_axioms(const FiniteMagma& m) {
  const int n = m.order();
  AxiomProfile p;
  p.order = n;
  p.left_identities = Bits(n);

  for (int e = 0; e < n; ++e) {
    bool left = true;
    for (int s = 0; s < n && left; ++s) left = m.at(e, s) == s;
    if (left) p.left_identities.set(e);
  }
  for (int e = 0; e < n; ++e) {
    if (!p.left_identities.test(e)) continue;
    bool right = true;
    for (int s = 0; s < n && right; ++s) right = m.at(s, e) == s;
    if (right) {
      // A magma cannot carry two distinct two-sided identities.
      assert(!p.identity);
      p.identity = e;
    }
  }

  p.associative = check_associative(m);
  p.commutative = check_commutative(m);
  p.latin_square = rows_and_columns_are_permutations(m);
  // A commutative semigroup satisfies both laws automatically; the quartic
  // scan is reserved for the structures that actually need it.
  if (p.associative && p.commutative) {
    p.left_invertive = true;
    p.medial = true;
  } else {
    p.left_invertive = check_left_invertive(m);
    p.medial = check_medial(m);
  }
  p.is_loop = p.latin_square && p.identity.has_value();
  p.is_group = p.associative && p.is_loop;
  return p;
}

const AxiomProfile& FiniteMagma::profile() const {
  std::call_once(profile_once_, [this] { profile_ = compute_axioms(*this); });
  return *profile_;
}

Subset make_subset(MagmaPtr m, const std::vector<int>& indices) {
  Subset s{std::move(m), Bits(0)};
  s.bits = Bits(s.universe->order());
  for (int i : indices) {
    if (i < 0 || i >= s.universe->order())
      fail(Err::IndexOutOfRange, "subset index " + std::to_string(i));
    s.bits.set(i);
  }
  return s;
}

Subset subset_of_labels(MagmaPtr m, const std::vector<std::string>& labels) {
  Subset s{m, Bits(m->order())};
  for (const auto& l : labels) s.bits.set(m->require_index(l));
  return s;
}

Subset full_subset(MagmaPtr m) {
  Subset s{m, Bits::full(m->order())};
  return s;
}

std::vector<std::string> subset_labels(const Subset& s) {
  std::vector<std::string> out;
  s.bits.for_each([&](int i) { out.push_back(s.universe->label(i)); });
  return out;
}

void require_same_universe(const Subset& a, const Subset& b) {
  if (a.universe.get() != b.universe.get())
    fail(Err::UniverseMismatch, "subsets live over different magmas");
}

void require_over(const FiniteMagma& m, const Subset& s) {
  if (s.universe.get() != &m) fail(Err::UniverseMismatch, "subset is not over magma '" + m.name() + "'");
}

}  // namespace nsalg
