#pragma once

#include <optional>

#include "nsalg/magma.hpp"

namespace nsalg {

enum class IdealSide { left, right, two_sided };
enum class NormalMode { classical, literal };
enum class ConjMode { classical, complementary };

bool is_closed(const Subset& s);

// Least closed superset of s under the universe operation.
Subset closure(const Subset& s);

// Two-sided identity of the induced operation on s, if any.
std::optional<int> induced_identity(const Subset& s);

// Group test on the induced operation: nonempty, closed, associative on s,
// identity within s, inverses within s. The ambient magma need not be a group.
bool is_subgroup(const Subset& s);

// Loop test on the induced operation: nonempty, closed, Latin square on s,
// identity within s.
bool is_subloop(const Subset& s);

// The subloop notion used by the soft checks: closed and containing some
// subset that passes is_subloop (equivalently, closed with an idempotent).
bool is_subloop_neutro(const Subset& s);

// True when s has a nonempty proper subset forming a group under the
// induced operation; fills witness with one such subset when requested.
bool contains_proper_group(const Subset& s, Subset* witness = nullptr);

// u*s (and/or s*u) stays in s for every u in the ambient set, which
// defaults to the whole carrier. s must be nonempty and closed.
bool is_ideal(const Subset& s, IdealSide side, const std::optional<Subset>& ambient = std::nullopt,
              std::string* witness = nullptr);

// Least two-sided ideal containing s.
Subset ideal_closure(const Subset& s);

bool is_normal_subgroup(const Subset& s, NormalMode mode);

bool are_conjugate(const Subset& p, const Subset& k, ConjMode mode);

MagmaPtr direct_product(const MagmaPtr& a, const MagmaPtr& b, int cap = kCarrierCap);

Subset setwise_product(const Subset& s, const Subset& t);

// Units of the magma relative to identity e: elements with a two-sided
// inverse. Returns (unit, inverse) pairs.
std::vector<std::pair<int, int>> units(const FiniteMagma& m, int e);

}  // namespace nsalg
