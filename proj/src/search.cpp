#include <algorithm>

#include "nsalg/claims.hpp"
#include "nsalg/neutro.hpp"

namespace nsalg {

namespace {

struct SearchFamily {
  std::string pool;       // predicate handle that admits inputs
  SoftBinaryKind op;
  std::string check;      // predicate handle tested on the result
  std::string universes;  // ring-add | ring-mul | adjoin-cyclic | fixture:<name>[,...]
};

// Family names follow "<operation>-of-soft-<structure>"; operations cover
// all six soft binaries where the registered claims need them.
const std::map<std::string, SearchFamily>& families() {
  static const std::map<std::string, SearchFamily> table = [] {
    std::map<std::string, SearchFamily> t;
    auto grid = [&t](const std::string& tail, const std::string& pred,
                     const std::string& universes, std::initializer_list<SoftBinaryKind> ops) {
      for (SoftBinaryKind op : ops) {
        std::string opname;
        switch (op) {
          case SoftBinaryKind::extended_union: opname = "extended-union"; break;
          case SoftBinaryKind::restricted_union: opname = "restricted-union"; break;
          case SoftBinaryKind::extended_intersection: opname = "extended-intersection"; break;
          case SoftBinaryKind::restricted_intersection: opname = "restricted-intersection"; break;
          case SoftBinaryKind::and_op: opname = "and"; break;
          case SoftBinaryKind::or_op: opname = "or"; break;
        }
        t.emplace(opname + "-of-soft-" + tail, SearchFamily{pred, op, pred, universes});
      }
    };
    using K = SoftBinaryKind;
    grid("groups", "subgroup", "ring-add",
         {K::extended_union, K::restricted_union, K::or_op});
    grid("pseudo", "pseudo", "ring-add",
         {K::extended_union, K::restricted_union, K::or_op});
    grid("pseudo-lagrange", "pseudo-lagrange", "ring-add;adjoin-cyclic",
         {K::extended_union, K::restricted_union, K::or_op, K::extended_intersection,
          K::restricted_intersection, K::and_op});
    grid("lagrange", "lagrange", "adjoin-cyclic",
         {K::extended_union, K::restricted_union, K::or_op, K::extended_intersection,
          K::restricted_intersection, K::and_op});
    grid("normal", "normal-classical", "fixture:klein_n",
         {K::extended_union, K::restricted_union, K::or_op, K::extended_intersection,
          K::restricted_intersection, K::and_op});
    grid("subloops", "subloop-neutrosophic", "fixture:nl5_3",
         {K::extended_union, K::restricted_union, K::or_op});
    grid("sub-LA", "sub-LA", "fixture:la8",
         {K::extended_union, K::restricted_union, K::or_op});
    grid("submonoids", "submonoid", "ring-mul",
         {K::extended_union, K::restricted_union, K::or_op});
    grid("ideals", "ideal-two-sided", "ring-mul", {K::extended_union});
    return t;
  }();
  return table;
}

std::vector<MagmaPtr> universe_sequence(const Corpus& corpus, const std::string& spec,
                                        int max_carrier) {
  std::vector<MagmaPtr> out;
  if (auto semi = spec.find(';'); semi != std::string::npos) {
    for (size_t pos = 0; pos != std::string::npos;) {
      size_t next = spec.find(';', pos);
      std::string part = spec.substr(pos, next == std::string::npos ? next : next - pos);
      auto sub = universe_sequence(corpus, part, max_carrier);
      out.insert(out.end(), sub.begin(), sub.end());
      pos = next == std::string::npos ? next : next + 1;
    }
    return out;
  }
  if (spec == "ring-add" || spec == "ring-mul") {
    RingKind kind = spec == "ring-add" ? RingKind::additive : RingKind::multiplicative;
    for (int n = 2; n * n <= max_carrier; ++n) out.push_back(ring_extension(n, kind));
    return out;
  }
  if (spec == "adjoin-cyclic") {
    for (int k = 2; 2 * k <= max_carrier; ++k) {
      std::vector<std::string> labels;
      labels.push_back("1");
      for (int i = 1; i < k; ++i) labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
      std::vector<int32_t> table(static_cast<size_t>(k) * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) table[static_cast<size_t>(i) * k + j] = (i + j) % k;
      auto base = std::make_shared<FiniteMagma>("c" + std::to_string(k), std::move(labels),
                                                std::move(table));
      out.push_back(adjoin_indeterminate(base));
    }
    return out;
  }
  if (spec.rfind("fixture:", 0) == 0) {
    std::string rest = spec.substr(8);
    size_t pos = 0;
    while (pos != std::string::npos) {
      size_t comma = rest.find(',', pos);
      std::string name = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      MagmaPtr m = corpus.magma(name);
      if (m->order() <= max_carrier) out.push_back(m);
      pos = comma == std::string::npos ? comma : comma + 1;
    }
    return out;
  }
  fail(Err::ClaimError, "unknown universe family '" + spec + "'");
}

// All predicate-passing subsets in canonical (size, lex) order. Exhaustive
// power-set scan for small carriers, generated closures above that.
std::vector<Subset> predicate_pool(const MagmaPtr& m, const ImagePredicate& pred) {
  std::vector<Subset> pool;
  const int n = m->order();
  if (n <= 14) {
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      Subset s{m, Bits(n)};
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.bits.set(i);
      if (pred(SoftImage{s})) pool.push_back(std::move(s));
    }
  } else {
    std::vector<Bits> seen;
    auto consider = [&](Subset s) {
      if (std::find(seen.begin(), seen.end(), s.bits) != seen.end()) return;
      seen.push_back(s.bits);
      if (pred(SoftImage{s})) pool.push_back(std::move(s));
    };
    for (int x = 0; x < n; ++x) consider(closure(make_subset(m, {x})));
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) consider(closure(make_subset(m, {x, y})));
    consider(full_subset(m));
  }
  std::sort(pool.begin(), pool.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits.lex_less(b.bits);
  });
  return pool;
}

std::string render_labels(const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.bits.for_each([&](int i) {
    out += (first ? "" : ",") + s.universe->label(i);
    first = false;
  });
  return out + "}";
}

}  // namespace

bool has_search_family(const std::string& claim_id) { return families().count(claim_id) > 0; }

std::optional<Witness> search_counterexample(const Corpus& corpus, const std::string& claim_id,
                                             int max_carrier, uint64_t seed) {
  (void)seed;  // canonical enumeration is already deterministic; recorded in reports
  auto fam_it = families().find(claim_id);
  if (fam_it == families().end()) fail(Err::UnknownClaim, "no search family for '" + claim_id + "'");
  const SearchFamily& fam = fam_it->second;

  for (const MagmaPtr& u : universe_sequence(corpus, fam.universes, max_carrier)) {
    UniverseRef ref{u, nullptr};
    ImagePredicate admit = lookup_predicate(ref, fam.pool);
    ImagePredicate check = lookup_predicate(ref, fam.check);
    auto pool = predicate_pool(u, admit);
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); ++j) {
        SoftSet f("F", ref), k("K", ref);
        f.add("a1", SoftImage{pool[i]});
        k.add("a1", SoftImage{pool[j]});
        std::string images =
            "F(a1)=" + render_labels(pool[i]) + " K(a1)=" + render_labels(pool[j]);
        try {
          SoftSet combined = soft_binary(fam.op, f, k);
          SoftVerdict v = soft_predicate(combined, check, Quantifier::all);
          if (!v.holds) {
            // Witness re-verification: the named image must fail in isolation.
            const SoftImage* img = combined.find(*v.witness);
            if (!img || check(*img))
              fail(Err::ClaimError, "witness for '" + claim_id + "' did not replay");
            return Witness{u->name(), images + " -> " + to_string(fam.op) + " image " +
                                          image_to_string(*img) + " fails " + fam.check};
          }
        } catch (const Error& e) {
          if (e.code() != Err::EmptyImage) throw;
          return Witness{u->name(),
                         images + " -> " + to_string(fam.op) + " collapses to an empty image"};
        }
      }
  }
  return std::nullopt;
}

}  // namespace nsalg
