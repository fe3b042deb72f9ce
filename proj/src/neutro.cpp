#include "nsalg/neutro.hpp"

#include <algorithm>

namespace nsalg {

MagmaPtr adjoin_indeterminate(const MagmaPtr& base, int cap) {
  const int n = base->order();
  if (2 * n > cap) fail(Err::SizeOverflow, "adjoin would exceed the carrier cap");
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (int i = 0; i < n; ++i) labels.push_back(base->label(i));
  for (int i = 0; i < n; ++i) labels.push_back(base->label(i) + "I");

  const int nn = 2 * n;
  std::vector<int32_t> table(static_cast<size_t>(nn) * nn);
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y) {
      int g = x % n, h = y % n;
      int flag = (x >= n || y >= n) ? 1 : 0;
      table[static_cast<size_t>(x) * nn + y] = base->at(g, h) + flag * n;
    }

  NeutroInfo info;
  info.mode = NeutroMode::adjoin;
  info.real.resize(nn);
  info.indet.resize(nn);
  for (int i = 0; i < nn; ++i) {
    info.real[i] = i % n;
    info.indet[i] = i >= n ? 1 : 0;
  }
  return std::make_shared<FiniteMagma>("N_" + base->name(), std::move(labels), std::move(table),
                                       std::move(info));
}

std::string ring_label(int a, int b, int n) {
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  if (a == 0 && b == 0) return "0";
  std::string ip = b == 0 ? "" : (b == 1 ? "I" : std::to_string(b) + "I");
  if (a == 0) return ip;
  if (b == 0) return std::to_string(a);
  return std::to_string(a) + "+" + ip;
}

MagmaPtr ring_extension(int n, RingKind kind, int cap) {
  if (n < 2) fail(Err::BadParams, "ring extension needs modulus >= 2");
  const long long nn = static_cast<long long>(n) * n;
  if (nn > cap) fail(Err::SizeOverflow, "ring extension would exceed the carrier cap");

  const int sz = static_cast<int>(nn);
  std::vector<std::string> labels;
  labels.reserve(sz);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) labels.push_back(ring_label(a, b, n));

  std::vector<int32_t> table(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int ra, rb;
          if (kind == RingKind::additive) {
            ra = (a + c) % n;
            rb = (b + d) % n;
          } else {
            ra = (a * c) % n;
            rb = (a * d + b * c + b * d) % n;
          }
          table[static_cast<size_t>(a * n + b) * sz + (c * n + d)] = ra * n + rb;
        }

  NeutroInfo info;
  info.mode = NeutroMode::ring;
  info.modulus = n;
  info.real.resize(sz);
  info.indet.resize(sz);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      info.real[a * n + b] = a;
      info.indet[a * n + b] = b;
    }
  std::string name = "N_Z" + std::to_string(n) +
                     (kind == RingKind::additive ? "_add" : "_mul");
  return std::make_shared<FiniteMagma>(std::move(name), std::move(labels), std::move(table),
                                       std::move(info));
}

NeutroClass classify_subset(const Subset& s) {
  const FiniteMagma& m = *s.universe;
  const NeutroInfo& info = m.neutro();
  auto identity = m.profile().identity;

  NeutroClass c;
  c.strong = true;
  c.real_only = true;
  s.bits.for_each([&](int i) {
    const bool neutro = info.indet[i] != 0;
    if (neutro) {
      c.contains_neutrosophic = true;
      c.real_only = false;
    } else if (!(identity && *identity == i)) {
      c.strong = false;
    }
  });
  return c;
}

bool is_pseudo(const Subset& s, Subset* witness_subgroup) {
  if (!is_subgroup(s)) return false;
  const int e = *induced_identity(s);
  // Any proper subgroup of size >= 2 contains one generated by a single
  // non-identity element, so scanning cyclic closures is exhaustive.
  std::vector<int> idx = s.bits.indices();
  for (int x : idx) {
    if (x == e) continue;
    Subset cyc = closure(make_subset(s.universe, {x}));
    if (cyc.bits != s.bits) {
      if (witness_subgroup) *witness_subgroup = cyc;
      return false;
    }
  }
  return true;
}

namespace {

// Latin square plus identity on the real block of an adjoin-mode magma,
// checked in place; the block is table-identical to the adjoined base.
bool real_block_is_loop(const FiniteMagma& m) {
  const NeutroInfo& info = m.neutro();
  std::vector<int> block;
  for (int i = 0; i < m.order(); ++i)
    if (info.indet[i] == 0) block.push_back(i);
  if (block.empty()) return false;
  for (int i : block)
    for (int j : block)
      if (info.indet[m.at(i, j)] != 0) return false;

  const int k = static_cast<int>(block.size());
  std::vector<int> pos(m.order(), -1);
  for (int i = 0; i < k; ++i) pos[block[i]] = i;
  std::vector<char> seen(k);
  for (int x : block) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y : block) {
      int p = pos[m.at(x, y)];
      if (p < 0 || seen[p]) return false;
      seen[p] = 1;
    }
  }
  for (int y : block) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x : block) {
      int p = pos[m.at(x, y)];
      if (p < 0 || seen[p]) return false;
      seen[p] = 1;
    }
  }
  for (int e : block) {
    bool ok = true;
    for (int x : block)
      if (m.at(e, x) != x || m.at(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

SubstructureBase resolve_base(const FiniteMagma& m) {
  const AxiomProfile& p = m.profile();
  if (p.is_group) return SubstructureBase::subgroup;
  if (p.is_loop) return SubstructureBase::subloop_neutro;
  if (m.is_neutrosophic() && m.neutro().mode == NeutroMode::adjoin && real_block_is_loop(m))
    return SubstructureBase::subloop_neutro;
  return SubstructureBase::closed;
}

bool substructure_holds(const Subset& s, SubstructureBase base) {
  if (base == SubstructureBase::auto_detect) base = resolve_base(*s.universe);
  switch (base) {
    case SubstructureBase::subgroup: return is_subgroup(s);
    case SubstructureBase::subloop_neutro: return is_subloop_neutro(s);
    case SubstructureBase::closed: return !s.empty() && is_closed(s);
    case SubstructureBase::auto_detect: break;
  }
  return false;
}

bool is_lagrange(const Subset& s, SubstructureBase base) {
  if (!substructure_holds(s, base)) return false;
  return s.universe->order() % s.count() == 0;
}

}  // namespace nsalg
