#pragma once

#include "nsalg/magma.hpp"
#include "nsalg/subset_ops.hpp"

namespace nsalg {

enum class RingKind { additive, multiplicative };

// Doubles the carrier to G u GI with (g,s)*(h,t) = (g*h, s or t); the flag
// rides along because I*I = I.
MagmaPtr adjoin_indeterminate(const MagmaPtr& base, int cap = kCarrierCap);

// Full a+bI carrier over Z_n. Additive: componentwise. Multiplicative:
// (a+bI)(c+dI) = ac + (ad+bc+bd)I, the expansion forced by I*I = I.
MagmaPtr ring_extension(int n, RingKind kind, int cap = kCarrierCap);

std::string ring_label(int a, int b, int n);

struct NeutroClass {
  bool contains_neutrosophic = false;
  bool strong = false;     // every element neutrosophic, a real identity excepted
  bool real_only = false;
};

NeutroClass classify_subset(const Subset& s);

// Group with no proper subgroup beyond the trivial one.
bool is_pseudo(const Subset& s, Subset* witness_subgroup = nullptr);

// Which substructure notion backs a Lagrange test.
enum class SubstructureBase { auto_detect, subgroup, subloop_neutro, closed };

bool substructure_holds(const Subset& s, SubstructureBase base);

// Substructure of the universe's own kind whose size divides the carrier.
bool is_lagrange(const Subset& s, SubstructureBase base = SubstructureBase::auto_detect);

// Kind-appropriate substructure test resolved from the universe profile:
// groups take the strict subgroup test, loop-like universes the subloop
// notion, anything else plain closure.
SubstructureBase resolve_base(const FiniteMagma& m);

}  // namespace nsalg
