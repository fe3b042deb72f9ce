#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsalg/bitset.hpp"
#include "nsalg/errors.hpp"

namespace nsalg {

// Largest carrier the engine will construct; keeps every exhaustive law
// check comfortably inside the suite's time budget.
inline constexpr int kCarrierCap = 4096;

struct AxiomProfile {
  bool associative = false;
  bool commutative = false;
  bool left_invertive = false;  // (x*y)*z == (z*y)*x
  bool medial = false;          // (a*b)*(c*d) == (a*c)*(b*d)
  bool latin_square = false;
  Bits left_identities;
  std::optional<int> identity;  // two-sided
  bool is_group = false;
  bool is_loop = false;
  int order = 0;
};

// How a neutrosophic carrier decomposes into real / indeterminate parts.
enum class NeutroMode { adjoin, ring };

struct NeutroInfo {
  NeutroMode mode = NeutroMode::adjoin;
  int modulus = 0;              // ring mode: coefficients live in Z_modulus
  std::vector<int32_t> real;    // adjoin: base-carrier index; ring: coefficient a
  std::vector<int32_t> indet;   // adjoin: 0/1 flag; ring: coefficient b
};

class FiniteMagma {
 public:
  FiniteMagma(std::string name, std::vector<std::string> labels, std::vector<int32_t> table,
              std::optional<NeutroInfo> neutro = std::nullopt);

  FiniteMagma(const FiniteMagma&) = delete;
  FiniteMagma& operator=(const FiniteMagma&) = delete;

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(labels_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  std::optional<int> index_of(const std::string& label) const;
  int require_index(const std::string& label) const;

  int apply(int x, int y) const {
    const int n = order();
    if (x < 0 || x >= n || y < 0 || y >= n)
      fail(Err::IndexOutOfRange, "apply(" + std::to_string(x) + "," + std::to_string(y) +
                                     ") on magma '" + name_ + "' of order " + std::to_string(n));
    return table_[static_cast<size_t>(x) * n + y];
  }

  // Unchecked lookup for inner loops.
  int at(int x, int y) const { return table_[static_cast<size_t>(x) * order() + y]; }
  const int32_t* row(int x) const { return table_.data() + static_cast<size_t>(x) * order(); }

  // Exhaustive axiom profile, computed once and cached.
  const AxiomProfile& profile() const;

  bool is_neutrosophic() const { return neutro_.has_value(); }
  const NeutroInfo& neutro() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int32_t> table_;
  std::unordered_map<std::string, int> index_;
  std::optional<NeutroInfo> neutro_;

  mutable std::once_flag profile_once_;
  mutable std::optional<AxiomProfile> profile_;
};

using MagmaPtr = std::shared_ptr<const FiniteMagma>;

// Membership bit-set over one magma's carrier.
struct Subset {
  MagmaPtr universe;
  Bits bits;

  int count() const { return bits.count(); }
  bool empty() const { return bits.none(); }
};

Subset make_subset(MagmaPtr m, const std::vector<int>& indices);
Subset subset_of_labels(MagmaPtr m, const std::vector<std::string>& labels);
Subset full_subset(MagmaPtr m);
std::vector<std::string> subset_labels(const Subset& s);

// AxiomProfile recomputed from scratch (used by the cache and by tests).
AxiomProfile compute_axioms(const FiniteMagma& m);

void require_same_universe(const Subset& a, const Subset& b);
void require_over(const FiniteMagma& m, const Subset& s);

}  // namespace nsalg
