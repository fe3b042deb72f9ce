#pragma once

#include <functional>
#include <variant>

#include "nsalg/nstructure.hpp"

namespace nsalg {

// A soft set lives over exactly one of these.
struct UniverseRef {
  MagmaPtr magma;
  NStructPtr nstruct;

  bool is_n() const { return nstruct != nullptr; }
  bool same_as(const UniverseRef& o) const {
    return magma.get() == o.magma.get() && nstruct.get() == o.nstruct.get();
  }
  std::string name() const { return is_n() ? nstruct->name() : magma->name(); }
};

using SoftImage = std::variant<Subset, NSubset>;

bool image_flat_empty(const SoftImage& img);
int image_size(const SoftImage& img);
SoftImage image_intersect(const SoftImage& a, const SoftImage& b);
SoftImage image_union(const SoftImage& a, const SoftImage& b);
bool image_subset_of(const SoftImage& a, const SoftImage& b);
bool image_equal(const SoftImage& a, const SoftImage& b);
std::string image_to_string(const SoftImage& img);

// Finite ordered mapping from parameter labels to nonempty images.
class SoftSet {
 public:
  SoftSet(std::string name, UniverseRef universe) : name_(std::move(name)), universe_(universe) {}

  const std::string& name() const { return name_; }
  const UniverseRef& universe() const { return universe_; }

  int size() const { return static_cast<int>(params_.size()); }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& param(int i) const { return params_.at(i); }
  const SoftImage& image(int i) const { return images_.at(i); }
  const SoftImage* find(const std::string& param) const;

  void add(const std::string& param, SoftImage image);

 private:
  std::string name_;
  UniverseRef universe_;
  std::vector<std::string> params_;
  std::vector<SoftImage> images_;
};

struct SoftVerdict {
  bool holds = false;
  std::vector<std::pair<std::string, bool>> per_parameter;
  std::optional<std::string> witness;
};

enum class Quantifier { all, at_least_one, none };
Quantifier quantifier_from_string(const std::string& s);

enum class SoftBinaryKind {
  restricted_intersection,
  extended_intersection,
  restricted_union,
  extended_union,
  and_op,
  or_op,
};
SoftBinaryKind soft_binary_kind_from_string(const std::string& s);
const char* to_string(SoftBinaryKind k);

// A subset predicate bound to one universe, evaluating a single image.
using ImagePredicate = std::function<bool(const SoftImage&)>;

// Registered handles: subgroup, pseudo, lagrange, normal-classical,
// normal-literal, strong, subloop-neutrosophic, sub-LA, ideal-left,
// ideal-right, ideal-two-sided, closed, neutro-subgroup, submonoid, and for
// N-structure universes sub-N-plain, sub-N-structure, strong-sub-N,
// lagrange-sub-N, n-ideal.
ImagePredicate lookup_predicate(const UniverseRef& u, const std::string& handle);
std::vector<std::string> predicate_handles(bool n_universe);

// SOFT text format:
//   softset <name> over <universe-name>
//   param <label>: <elem> ...                    (magma universes)
//   param <label>: [<elems>] [<elems>] ...       (one bracket group per component)
//   end
SoftSet parse_softset(const std::string& text,
                      const std::function<UniverseRef(const std::string&)>& resolve);
std::string format_softset(const SoftSet& f);

bool soft_is_subset(const SoftSet& f, const SoftSet& h);
bool soft_equal(const SoftSet& f, const SoftSet& h);

SoftSet soft_binary(SoftBinaryKind kind, const SoftSet& f, const SoftSet& k, bool lenient = false);

// Imagewise setwise product over a shared parameter set.
SoftSet soft_product(const SoftSet& f, const SoftSet& k);

// Parameters A x B, image at (a,b) = F(a)K(b) over the same universe.
SoftSet star_product(const SoftSet& f, const SoftSet& k);

// Soft set over the direct product universe with F(a) x K(b) images.
SoftSet cartesian_product(const SoftSet& f, const SoftSet& k, int cap = kCarrierCap);

SoftVerdict soft_predicate(const SoftSet& f, const std::string& handle, Quantifier q);
SoftVerdict soft_predicate(const SoftSet& f, const ImagePredicate& pred, Quantifier q);

// Pairwise conjugacy across all parameter pairs.
SoftVerdict soft_conjugate(const SoftSet& f, ConjMode mode);

enum class IdentityAbsolute { identity, absolute, neither };
IdentityAbsolute soft_identity_or_absolute(const SoftSet& f);

// (H over B) is a soft substructure of (F over A): B inside A, every H(b)
// inside F(b) and passing pred.
bool soft_substructure_of(const SoftSet& h, const SoftSet& f, const ImagePredicate& pred);

// Every H(b) is a two-sided ideal of F(b), ambient F(b).
bool soft_ideal_of(const SoftSet& h, const SoftSet& f);

}  // namespace nsalg
