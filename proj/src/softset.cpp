#include "nsalg/softset.hpp"

#include <algorithm>
#include <sstream>

#include "nsalg/neutro.hpp"

namespace nsalg {

bool image_flat_empty(const SoftImage& img) {
  if (const auto* s = std::get_if<Subset>(&img)) return s->empty();
  return std::get<NSubset>(img).all_parts_empty();
}

int image_size(const SoftImage& img) {
  if (const auto* s = std::get_if<Subset>(&img)) return s->count();
  return std::get<NSubset>(img).total_size();
}

namespace {

template <typename Op>
SoftImage image_merge(const SoftImage& a, const SoftImage& b, Op op) {
  if (const auto* sa = std::get_if<Subset>(&a)) {
    const auto& sb = std::get<Subset>(b);
    require_same_universe(*sa, sb);
    return Subset{sa->universe, op(sa->bits, sb.bits)};
  }
  const auto& na = std::get<NSubset>(a);
  const auto& nb = std::get<NSubset>(b);
  if (na.structure.get() != nb.structure.get())
    fail(Err::UniverseMismatch, "images over different structures");
  NSubset out{na.structure, {}};
  for (size_t i = 0; i < na.parts.size(); ++i)
    out.parts.push_back(Subset{na.parts[i].universe, op(na.parts[i].bits, nb.parts[i].bits)});
  return out;
}

}  // namespace

SoftImage image_intersect(const SoftImage& a, const SoftImage& b) {
  return image_merge(a, b, [](const Bits& x, const Bits& y) { return x & y; });
}

SoftImage image_union(const SoftImage& a, const SoftImage& b) {
  return image_merge(a, b, [](const Bits& x, const Bits& y) { return x | y; });
}

bool image_subset_of(const SoftImage& a, const SoftImage& b) {
  if (const auto* sa = std::get_if<Subset>(&a)) {
    const auto& sb = std::get<Subset>(b);
    require_same_universe(*sa, sb);
    return sb.bits.contains(sa->bits);
  }
  const auto& na = std::get<NSubset>(a);
  const auto& nb = std::get<NSubset>(b);
  if (na.structure.get() != nb.structure.get())
    fail(Err::UniverseMismatch, "images over different structures");
  for (size_t i = 0; i < na.parts.size(); ++i)
    if (!nb.parts[i].bits.contains(na.parts[i].bits)) return false;
  return true;
}

bool image_equal(const SoftImage& a, const SoftImage& b) {
  return image_subset_of(a, b) && image_subset_of(b, a);
}

std::string image_to_string(const SoftImage& img) {
  std::ostringstream out;
  if (const auto* s = std::get_if<Subset>(&img)) {
    out << '{';
    bool first = true;
    s->bits.for_each([&](int i) {
      out << (first ? "" : ",") << s->universe->label(i);
      first = false;
    });
    out << '}';
    return out.str();
  }
  const auto& n = std::get<NSubset>(img);
  for (size_t i = 0; i < n.parts.size(); ++i) {
    out << (i ? " " : "") << '[';
    bool first = true;
    n.parts[i].bits.for_each([&](int j) {
      out << (first ? "" : ",") << n.parts[i].universe->label(j);
      first = false;
    });
    out << ']';
  }
  return out.str();
}

const SoftImage* SoftSet::find(const std::string& param) const {
  for (size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == param) return &images_[i];
  return nullptr;
}

void SoftSet::add(const std::string& param, SoftImage image) {
  if (find(param)) fail(Err::DuplicateParameter, "parameter '" + param + "' in '" + name_ + "'");
  if (image_flat_empty(image))
    fail(Err::EmptyImage, "parameter '" + param + "' of '" + name_ + "' has an empty image");
  params_.push_back(param);
  images_.push_back(std::move(image));
}

Quantifier quantifier_from_string(const std::string& s) {
  if (s == "all") return Quantifier::all;
  if (s == "any" || s == "at_least_one") return Quantifier::at_least_one;
  if (s == "none") return Quantifier::none;
  fail(Err::ParseError, "unknown quantifier '" + s + "'");
}

SoftBinaryKind soft_binary_kind_from_string(const std::string& s) {
  if (s == "restricted_intersection" || s == "rint") return SoftBinaryKind::restricted_intersection;
  if (s == "extended_intersection" || s == "eint") return SoftBinaryKind::extended_intersection;
  if (s == "restricted_union" || s == "runion") return SoftBinaryKind::restricted_union;
  if (s == "extended_union" || s == "eunion") return SoftBinaryKind::extended_union;
  if (s == "and") return SoftBinaryKind::and_op;
  if (s == "or") return SoftBinaryKind::or_op;
  fail(Err::ParseError, "unknown soft operation '" + s + "'");
}

const char* to_string(SoftBinaryKind k) {
  switch (k) {
    case SoftBinaryKind::restricted_intersection: return "restricted_intersection";
    case SoftBinaryKind::extended_intersection: return "extended_intersection";
    case SoftBinaryKind::restricted_union: return "restricted_union";
    case SoftBinaryKind::extended_union: return "extended_union";
    case SoftBinaryKind::and_op: return "and";
    case SoftBinaryKind::or_op: return "or";
  }
  return "?";
}

namespace {

// Predicate failures on malformed inputs count as "does not hold" rather
// than aborting a whole soft verdict.
bool guarded(const std::function<bool()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.code()) {
      case Err::EmptyPart:
      case Err::NotASubgroup:
      case Err::NotASubNStructure:
      case Err::NoIdentity:
        return false;
      default: throw;
    }
  }
}

ImagePredicate magma_predicate(const std::string& handle) {
  using P = std::function<bool(const Subset&)>;
  P p;
  if (handle == "subgroup") p = [](const Subset& s) { return is_subgroup(s); };
  else if (handle == "closed") p = [](const Subset& s) { return !s.empty() && is_closed(s); };
  else if (handle == "sub-LA") p = [](const Subset& s) { return !s.empty() && is_closed(s); };
  else if (handle == "pseudo") p = [](const Subset& s) { return is_pseudo(s); };
  else if (handle == "lagrange") p = [](const Subset& s) { return is_lagrange(s); };
  else if (handle == "pseudo-lagrange")
    p = [](const Subset& s) {
      return is_pseudo(s) && s.universe->order() % s.count() == 0;
    };
  else if (handle == "strong-lagrange")
    p = [](const Subset& s) {
      if (!is_lagrange(s)) return false;
      NeutroClass c = classify_subset(s);
      return c.strong && c.contains_neutrosophic;
    };
  else if (handle == "normal-classical")
    p = [](const Subset& s) { return is_normal_subgroup(s, NormalMode::classical); };
  else if (handle == "normal-literal")
    p = [](const Subset& s) { return is_normal_subgroup(s, NormalMode::literal); };
  else if (handle == "strong")
    p = [](const Subset& s) {
      if (!substructure_holds(s, SubstructureBase::auto_detect)) return false;
      NeutroClass c = classify_subset(s);
      return c.strong && c.contains_neutrosophic;
    };
  else if (handle == "subloop-neutrosophic")
    p = [](const Subset& s) { return is_subloop_neutro(s); };
  else if (handle == "neutro-subgroup")
    p = [](const Subset& s) { return !s.empty() && is_closed(s) && contains_proper_group(s); };
  else if (handle == "submonoid")
    p = [](const Subset& s) {
      auto e = s.universe->profile().identity;
      if (!e) fail(Err::NoIdentity, "submonoid test needs an identity");
      return !s.empty() && is_closed(s) && s.bits.test(*e);
    };
  else if (handle == "ideal-left")
    p = [](const Subset& s) { return is_ideal(s, IdealSide::left); };
  else if (handle == "ideal-right")
    p = [](const Subset& s) { return is_ideal(s, IdealSide::right); };
  else if (handle == "ideal-two-sided")
    p = [](const Subset& s) { return is_ideal(s, IdealSide::two_sided); };
  else if (handle == "strong-ideal")
    p = [](const Subset& s) {
      if (!is_ideal(s, IdealSide::two_sided)) return false;
      NeutroClass c = classify_subset(s);
      return c.strong && c.contains_neutrosophic;
    };
  else if (handle == "principal-ideal")
    p = [](const Subset& s) {
      if (!is_ideal(s, IdealSide::two_sided)) return false;
      bool principal = false;
      s.bits.for_each([&](int x) {
        if (!principal && ideal_closure(make_subset(s.universe, {x})).bits == s.bits)
          principal = true;
      });
      return principal;
    };
  else {
    std::string known;
    for (const auto& h : predicate_handles(false)) known += (known.empty() ? "" : ", ") + h;
    fail(Err::UnknownPredicate, "no magma predicate '" + handle + "' (known: " + known + ")");
  }
  return [p = std::move(p)](const SoftImage& img) {
    return guarded([&] { return p(std::get<Subset>(img)); });
  };
}

ImagePredicate nstruct_predicate(const std::string& handle) {
  using P = std::function<bool(const NSubset&)>;
  P p;
  if (handle == "sub-N-plain")
    p = [](const NSubset& s) { return is_sub_n_structure(s, SubNStrength::plain); };
  else if (handle == "sub-N-structure")
    p = [](const NSubset& s) { return is_sub_n_structure(s, SubNStrength::neutrosophic); };
  else if (handle == "strong-sub-N")
    p = [](const NSubset& s) { return is_sub_n_structure(s, SubNStrength::strong); };
  else if (handle == "lagrange-sub-N")
    p = [](const NSubset& s) { return is_lagrange_sub_n(s); };
  else if (handle == "n-ideal")
    p = [](const NSubset& s) { return is_n_ideal(s); };
  else {
    std::string known;
    for (const auto& h : predicate_handles(true)) known += (known.empty() ? "" : ", ") + h;
    fail(Err::UnknownPredicate, "no N-structure predicate '" + handle + "' (known: " + known + ")");
  }
  return [p = std::move(p)](const SoftImage& img) {
    return guarded([&] { return p(std::get<NSubset>(img)); });
  };
}

}  // namespace

ImagePredicate lookup_predicate(const UniverseRef& u, const std::string& handle) {
  return u.is_n() ? nstruct_predicate(handle) : magma_predicate(handle);
}

std::vector<std::string> predicate_handles(bool n_universe) {
  if (n_universe)
    return {"sub-N-plain", "sub-N-structure", "strong-sub-N", "lagrange-sub-N", "n-ideal"};
  return {"subgroup",       "closed",          "sub-LA",        "pseudo",
          "lagrange",       "pseudo-lagrange", "strong-lagrange",
          "normal-classical", "normal-literal", "strong",
          "subloop-neutrosophic", "neutro-subgroup", "submonoid",  "ideal-left",
          "ideal-right",    "ideal-two-sided", "strong-ideal",  "principal-ideal"};
}

bool soft_is_subset(const SoftSet& f, const SoftSet& h) {
  if (!f.universe().same_as(h.universe()))
    fail(Err::UniverseMismatch, "soft sets over different universes");
  for (int i = 0; i < f.size(); ++i) {
    const SoftImage* other = h.find(f.param(i));
    if (!other || !image_subset_of(f.image(i), *other)) return false;
  }
  return true;
}

bool soft_equal(const SoftSet& f, const SoftSet& h) {
  return soft_is_subset(f, h) && soft_is_subset(h, f);
}

SoftSet soft_binary(SoftBinaryKind kind, const SoftSet& f, const SoftSet& k, bool lenient) {
  if (!f.universe().same_as(k.universe()))
    fail(Err::UniverseMismatch, "soft sets over different universes");

  const bool product_params = kind == SoftBinaryKind::and_op || kind == SoftBinaryKind::or_op;
  const bool restricted =
      kind == SoftBinaryKind::restricted_intersection || kind == SoftBinaryKind::restricted_union;
  const bool intersect_overlap = kind == SoftBinaryKind::restricted_intersection ||
                                 kind == SoftBinaryKind::extended_intersection ||
                                 kind == SoftBinaryKind::and_op;

  SoftSet out(f.name() + "_" + to_string(kind) + "_" + k.name(), f.universe());
  auto add = [&](const std::string& param, SoftImage img) {
    if (image_flat_empty(img)) {
      if (lenient) return;
      fail(Err::EmptyImage, "parameter '" + param + "' would get an empty image");
    }
    out.add(param, std::move(img));
  };

  if (product_params) {
    for (int i = 0; i < f.size(); ++i)
      for (int j = 0; j < k.size(); ++j) {
        SoftImage img = intersect_overlap ? image_intersect(f.image(i), k.image(j))
                                          : image_union(f.image(i), k.image(j));
        add("(" + f.param(i) + "," + k.param(j) + ")", std::move(img));
      }
    return out;
  }

  if (restricted) {
    bool overlap = false;
    for (int i = 0; i < f.size(); ++i)
      if (k.find(f.param(i))) overlap = true;
    if (!overlap) fail(Err::DisjointParameters, "restricted operation on disjoint parameter sets");
  }

  for (int i = 0; i < f.size(); ++i) {
    const SoftImage* other = k.find(f.param(i));
    if (other) {
      SoftImage img = intersect_overlap ? image_intersect(f.image(i), *other)
                                        : image_union(f.image(i), *other);
      add(f.param(i), std::move(img));
    } else if (!restricted) {
      add(f.param(i), f.image(i));
    }
  }
  if (!restricted) {
    for (int j = 0; j < k.size(); ++j)
      if (!f.find(k.param(j))) add(k.param(j), k.image(j));
  }
  return out;
}

namespace {

Subset image_setwise(const SoftImage& a, const SoftImage& b) {
  return setwise_product(std::get<Subset>(a), std::get<Subset>(b));
}

}  // namespace

SoftSet soft_product(const SoftSet& f, const SoftSet& k) {
  if (!f.universe().same_as(k.universe()))
    fail(Err::UniverseMismatch, "soft sets over different universes");
  if (f.size() != k.size()) fail(Err::ParameterMismatch, "parameter sets differ");
  SoftSet out(f.name() + "_prod_" + k.name(), f.universe());
  for (int i = 0; i < f.size(); ++i) {
    const SoftImage* other = k.find(f.param(i));
    if (!other) fail(Err::ParameterMismatch, "parameter '" + f.param(i) + "' missing");
    out.add(f.param(i), image_setwise(f.image(i), *other));
  }
  return out;
}

SoftSet star_product(const SoftSet& f, const SoftSet& k) {
  if (!f.universe().same_as(k.universe()))
    fail(Err::UniverseMismatch, "soft sets over different universes");
  SoftSet out(f.name() + "_star_" + k.name(), f.universe());
  for (int i = 0; i < f.size(); ++i)
    for (int j = 0; j < k.size(); ++j)
      out.add("(" + f.param(i) + "," + k.param(j) + ")", image_setwise(f.image(i), k.image(j)));
  return out;
}

SoftSet cartesian_product(const SoftSet& f, const SoftSet& k, int cap) {
  const MagmaPtr& u1 = f.universe().magma;
  const MagmaPtr& u2 = k.universe().magma;
  if (!u1 || !u2) fail(Err::UniverseMismatch, "cartesian product needs magma universes");
  MagmaPtr prod = direct_product(u1, u2, cap);
  SoftSet out(f.name() + "_x_" + k.name(), UniverseRef{prod, nullptr});
  const int nb = u2->order();
  for (int i = 0; i < f.size(); ++i)
    for (int j = 0; j < k.size(); ++j) {
      const auto& sa = std::get<Subset>(f.image(i));
      const auto& sb = std::get<Subset>(k.image(j));
      Subset img{prod, Bits(prod->order())};
      sa.bits.for_each([&](int x) { sb.bits.for_each([&](int y) { img.bits.set(x * nb + y); }); });
      out.add("(" + f.param(i) + "," + k.param(j) + ")", std::move(img));
    }
  return out;
}

SoftVerdict soft_predicate(const SoftSet& f, const ImagePredicate& pred, Quantifier q) {
  SoftVerdict v;
  for (int i = 0; i < f.size(); ++i)
    v.per_parameter.emplace_back(f.param(i), pred(f.image(i)));

  auto first_with = [&](bool value) -> std::optional<std::string> {
    for (const auto& [param, ok] : v.per_parameter)
      if (ok == value) return param;
    return std::nullopt;
  };

  switch (q) {
    case Quantifier::all: {
      auto bad = first_with(false);
      v.holds = !bad.has_value();
      v.witness = bad;
      break;
    }
    case Quantifier::at_least_one: {
      auto good = first_with(true);
      v.holds = good.has_value();
      v.witness = good;
      break;
    }
    case Quantifier::none: {
      auto good = first_with(true);
      v.holds = !good.has_value();
      v.witness = good;
      break;
    }
  }
  return v;
}

SoftVerdict soft_predicate(const SoftSet& f, const std::string& handle, Quantifier q) {
  return soft_predicate(f, lookup_predicate(f.universe(), handle), q);
}

SoftVerdict soft_conjugate(const SoftSet& f, ConjMode mode) {
  if (f.size() < 2) fail(Err::TooFewParameters, "soft conjugacy needs at least two parameters");
  SoftVerdict v;
  v.holds = true;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      bool ok = guarded([&] {
        if (f.universe().is_n())
          return are_conjugate_sub_n(std::get<NSubset>(f.image(i)), std::get<NSubset>(f.image(j)),
                                     mode);
        return are_conjugate(std::get<Subset>(f.image(i)), std::get<Subset>(f.image(j)), mode);
      });
      std::string pair = "(" + f.param(i) + "," + f.param(j) + ")";
      v.per_parameter.emplace_back(pair, ok);
      if (!ok && v.holds) {
        v.holds = false;
        v.witness = pair;
      }
    }
  return v;
}

IdentityAbsolute soft_identity_or_absolute(const SoftSet& f) {
  bool all_full = true;
  for (int i = 0; i < f.size() && all_full; ++i) {
    if (f.universe().is_n()) {
      const auto& n = std::get<NSubset>(f.image(i));
      for (size_t c = 0; c < n.parts.size(); ++c)
        all_full = all_full && n.parts[c].count() == n.parts[c].universe->order();
    } else {
      const auto& s = std::get<Subset>(f.image(i));
      all_full = s.count() == s.universe->order();
    }
  }
  if (all_full) return IdentityAbsolute::absolute;

  auto image_is_identity = [&](const SoftImage& img) {
    if (f.universe().is_n()) {
      const auto& n = std::get<NSubset>(img);
      for (const auto& part : n.parts) {
        auto e = part.universe->profile().identity;
        if (!e) fail(Err::NoIdentity, "component without identity");
        if (part.count() != 1 || !part.bits.test(*e)) return false;
      }
      return true;
    }
    const auto& s = std::get<Subset>(img);
    auto e = s.universe->profile().identity;
    if (!e)
      fail(Err::NoIdentity, "identity classification on identity-free universe '" +
                                s.universe->name() + "'");
    return s.count() == 1 && s.bits.test(*e);
  };
  bool all_identity = true;
  for (int i = 0; i < f.size() && all_identity; ++i) all_identity = image_is_identity(f.image(i));
  return all_identity ? IdentityAbsolute::identity : IdentityAbsolute::neither;
}

bool soft_substructure_of(const SoftSet& h, const SoftSet& f, const ImagePredicate& pred) {
  if (!h.universe().same_as(f.universe()))
    fail(Err::UniverseMismatch, "soft sets over different universes");
  for (int i = 0; i < h.size(); ++i) {
    const SoftImage* outer = f.find(h.param(i));
    if (!outer || !image_subset_of(h.image(i), *outer) || !pred(h.image(i))) return false;
  }
  return true;
}

bool soft_ideal_of(const SoftSet& h, const SoftSet& f) {
  if (!h.universe().same_as(f.universe()))
    fail(Err::UniverseMismatch, "soft sets over different universes");
  for (int i = 0; i < h.size(); ++i) {
    const SoftImage* outer = f.find(h.param(i));
    if (!outer) return false;
    const auto& inner = std::get<Subset>(h.image(i));
    const auto& ambient = std::get<Subset>(*outer);
    if (!ambient.bits.contains(inner.bits)) return false;
    if (!is_ideal(inner, IdealSide::two_sided, ambient)) return false;
  }
  return true;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

SoftSet parse_softset(const std::string& text,
                      const std::function<UniverseRef(const std::string&)>& resolve) {
  std::istringstream in(text);
  std::string line;
  std::optional<SoftSet> out;
  bool saw_end = false;
  while (std::getline(in, line)) {
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!out) {
      if (toks.size() != 4 || toks[0] != "softset" || toks[2] != "over")
        fail(Err::ParseError, "expected 'softset <name> over <universe>' header");
      out.emplace(toks[1], resolve(toks[3]));
      continue;
    }
    if (toks[0] == "end") {
      saw_end = true;
      break;
    }
    if (toks[0] != "param") fail(Err::ParseError, "expected 'param <label>: ...' line");
    if (toks.size() < 2) fail(Err::ParseError, "param line without a label");
    std::string label = toks[1];
    if (!label.empty() && label.back() == ':') label.pop_back();
    if (label.empty()) fail(Err::ParseError, "empty parameter label");

    const UniverseRef& u = out->universe();
    if (!u.is_n()) {
      std::vector<std::string> elems(toks.begin() + 2, toks.end());
      if (elems.empty())
        fail(Err::EmptyImage, "parameter '" + label + "' lists no elements");
      out->add(label, subset_of_labels(u.magma, elems));
      continue;
    }

    // Bracket groups, one per component: [a b] [c] ...
    NSubset img{u.nstruct, {}};
    for (int c = 0; c < u.nstruct->count(); ++c)
      img.parts.push_back(Subset{u.nstruct->component(c).magma,
                                 Bits(u.nstruct->component(c).magma->order())});
    int comp = -1;
    for (size_t t = 2; t < toks.size(); ++t) {
      std::string tok = toks[t];
      while (!tok.empty() && tok.front() == '[') {
        ++comp;
        tok.erase(tok.begin());
      }
      int closes = 0;
      while (!tok.empty() && tok.back() == ']') {
        ++closes;
        tok.pop_back();
      }
      if (!tok.empty()) {
        if (comp < 0 || comp >= u.nstruct->count())
          fail(Err::ParseError, "element outside a component group in '" + label + "'");
        img.parts[comp].bits.set(img.parts[comp].universe->require_index(tok));
      }
      (void)closes;
    }
    if (comp != u.nstruct->count() - 1)
      fail(Err::ParseError, "parameter '" + label + "' needs one bracket group per component");
    out->add(label, std::move(img));
  }
  if (!out || !saw_end) fail(Err::ParseError, "truncated soft set file");
  return *std::move(out);
}

std::string format_softset(const SoftSet& f) {
  std::ostringstream out;
  out << "softset " << f.name() << " over " << f.universe().name() << "\n";
  for (int i = 0; i < f.size(); ++i) {
    out << "param " << f.param(i) << ":";
    if (const auto* s = std::get_if<Subset>(&f.image(i))) {
      s->bits.for_each([&](int j) { out << ' ' << s->universe->label(j); });
    } else {
      const auto& n = std::get<NSubset>(f.image(i));
      for (const auto& part : n.parts) {
        out << " [";
        bool first = true;
        part.bits.for_each([&](int j) {
          out << (first ? "" : " ") << part.universe->label(j);
          first = false;
        });
        out << ']';
      }
    }
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace nsalg
