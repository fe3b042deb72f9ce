#include "nsalg/loops.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nsalg/subset_ops.hpp"

namespace nsalg {

void validate(const LoopParams& p) {
  if (p.n <= 3 || p.n % 2 == 0)
    fail(Err::BadParams, "loop index n must be odd and greater than 3");
  if (p.m <= 1 || p.m >= p.n) fail(Err::BadParams, "loop twist m must satisfy 1 < m < n");
  if (std::gcd(p.m, p.n) != 1 || std::gcd(p.m - 1, p.n) != 1)
    fail(Err::BadParams, "loop twist m needs gcd(m,n) = gcd(m-1,n) = 1");
}

MagmaPtr build_loop(const LoopParams& p) {
  validate(p);
  const int n = p.n;
  const int size = n + 1;
  std::vector<std::string> labels(size);
  labels[0] = "e";
  for (int i = 1; i <= n; ++i) labels[i] = std::to_string(i);

  std::vector<int32_t> table(static_cast<size_t>(size) * size);
  auto put = [&](int x, int y, int v) { table[static_cast<size_t>(x) * size + y] = v; };
  for (int x = 0; x < size; ++x) {
    put(0, x, x);
    put(x, 0, x);
  }
  for (int i = 1; i <= n; ++i) {
    put(i, i, 0);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int r = (p.m * j - (p.m - 1) * i) % n;
      r = ((r % n) + n) % n;
      put(i, j, r == 0 ? n : r);
    }
  }

  std::string name = "L" + std::to_string(p.n) + "_" + std::to_string(p.m);
  auto loop = std::make_shared<FiniteMagma>(std::move(name), std::move(labels), std::move(table));
  if (!loop->profile().is_loop)
    fail(Err::ConstructionInvariantBroken,
         "L" + std::to_string(p.n) + "(" + std::to_string(p.m) + ") failed the loop axioms");
  return loop;
}

namespace {

bool passes(const Subset& s, SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::subgroup: return is_subgroup(s);
    case SubstructureKind::subloop: return is_subloop(s);
    case SubstructureKind::closed: return !s.empty() && is_closed(s);
  }
  return false;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  while (true) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<Subset> enumerate_substructures(const MagmaPtr& m, SubstructureKind kind, int max_size,
                                            EnumMode mode) {
  const int n = m->order();
  if (mode == EnumMode::exhaustive && n > 64)
    fail(Err::TooLarge, "exhaustive enumeration is capped at carrier 64");
  const bool exhaustive = mode == EnumMode::exhaustive || (mode == EnumMode::automatic && n <= 64);

  std::vector<Subset> out;
  if (exhaustive) {
    for (int k = 1; k <= std::min(max_size, n); ++k) {
      std::vector<Subset> tier;
      combinations(n, k, [&](const std::vector<int>& pick) {
        Subset s = make_subset(m, pick);
        if (passes(s, kind)) tier.push_back(std::move(s));
      });
      // Combination order is already lexicographic within one size.
      out.insert(out.end(), tier.begin(), tier.end());
    }
    return out;
  }

  std::vector<Bits> seen;
  std::vector<Subset> found;
  auto consider = [&](Subset s) {
    if (s.count() > max_size || !passes(s, kind)) return;
    if (std::find(seen.begin(), seen.end(), s.bits) != seen.end()) return;
    seen.push_back(s.bits);
    found.push_back(std::move(s));
  };
  for (int x = 0; x < n; ++x) consider(closure(make_subset(m, {x})));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) consider(closure(make_subset(m, {x, y})));

  std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits.lex_less(b.bits);
  });
  return found;
}

}  // namespace nsalg
