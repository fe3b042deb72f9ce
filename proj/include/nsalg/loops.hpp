#pragma once

#include <vector>

#include "nsalg/magma.hpp"

namespace nsalg {

struct LoopParams {
  int n = 0;  // odd, > 3
  int m = 0;  // 1 < m < n, gcd(m,n) = gcd(m-1,n) = 1
};

void validate(const LoopParams& p);

// The (n+1)-element loop on {e,1..n}: e is the identity, i*i = e, and for
// i != j, i*j = (m*j - (m-1)*i) mod n with residue 0 written n. The loop
// axioms are asserted after construction; a failure aborts the build.
MagmaPtr build_loop(const LoopParams& p);

enum class SubstructureKind { subgroup, subloop, closed };
enum class EnumMode { automatic, exhaustive, generated };

// All subsets of size <= max_size satisfying the predicate, in canonical
// (size, lexicographic) order. Exhaustive up to order 64; larger carriers
// fall back to closures of generator sets of size <= 2.
std::vector<Subset> enumerate_substructures(const MagmaPtr& m, SubstructureKind kind, int max_size,
                                            EnumMode mode = EnumMode::automatic);

}  // namespace nsalg
