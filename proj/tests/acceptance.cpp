// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <random>

#include "fixture_paths.hpp"
#include "nsalg/claims.hpp"
#include "nsalg/loops.hpp"
#include "nsalg/neutro.hpp"

using namespace nsalg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> sorted_labels(const Subset& s) {
  auto v = subset_labels(s);
  std::sort(v.begin(), v.end());
  return v;
}

void criterion_1_table_fidelity(const Corpus& corpus) {
  bool ok = true;
  std::string detail;
  for (const char* name : {"la8", "la6_5_1_4", "la6_5_1_5"}) {
    MagmaPtr m = corpus.magma(name);
    auto t0 = Clock::now();
    AxiomProfile p = compute_axioms(*m);
    double ms = ms_since(t0);
    bool flags = p.left_invertive && !p.associative && p.medial;
    ok = ok && flags && ms < 1.0;
    detail += std::string(name) + "(li=" + (p.left_invertive ? "1" : "0") +
              ",assoc=" + (p.associative ? "1" : "0") + ",medial=" + (p.medial ? "1" : "0") +
              "," + std::to_string(ms).substr(0, 5) + "ms) ";
  }
  report(1, ok, detail);
}

void criterion_2_rosters(const Corpus& corpus) {
  MagmaPtr nz4 = ring_extension(4, RingKind::additive);
  std::vector<std::string> roster = nz4->labels();
  std::sort(roster.begin(), roster.end());
  std::vector<std::string> want = {"0",    "1",    "1+2I", "1+3I", "1+I",  "2",
                                   "2+2I", "2+3I", "2+I",  "3",    "3+2I", "3+3I",
                                   "3+I",  "2I",   "3I",   "I"};
  std::sort(want.begin(), want.end());
  bool ok16 = nz4->order() == 16 && roster == want;

  MagmaPtr nl15 = adjoin_indeterminate(build_loop({15, 2}));
  bool ok32 = nl15->order() == 32;

  MagmaPtr nl5 = adjoin_indeterminate(build_loop({5, 3}));
  std::vector<std::string> quoted = {"e",  "1",  "2",  "3",  "4",  "5",
                                     "eI", "1I", "2I", "3I", "4I", "5I"};
  bool ok12 = nl5->order() == 12 && nl5->labels() == quoted;
  (void)corpus;
  report(2, ok16 && ok32 && ok12,
         "N(Z4)=" + std::to_string(nz4->order()) + " adjoin(L15(2))=" +
             std::to_string(nl15->order()) + " adjoin(L5(3))=" + std::to_string(nl5->order()));
}

void criterion_3_counterexample_replay(const Corpus& corpus) {
  const SoftSet& f = corpus.softset("ex_2_1_5_F");
  const SoftSet& k = corpus.softset("ex_2_1_5_K");

  SoftSet eu = soft_binary(SoftBinaryKind::extended_union, f, k);
  const Subset& at_a2 = std::get<Subset>(*eu.find("a2"));
  bool image_ok = sorted_labels(at_a2) == std::vector<std::string>{"0", "1", "I"};
  bool eu_fails = !soft_predicate(eu, "subgroup", Quantifier::all).holds;

  bool ru_fails = !soft_predicate(soft_binary(SoftBinaryKind::restricted_union, f, k),
                                  "subgroup", Quantifier::all)
                       .holds;
  bool or_fails = !soft_predicate(soft_binary(SoftBinaryKind::or_op, f, k), "subgroup",
                                  Quantifier::all)
                       .holds;
  bool ri_holds = soft_predicate(soft_binary(SoftBinaryKind::restricted_intersection, f, k),
                                 "subgroup", Quantifier::all)
                      .holds;
  bool ei_holds = soft_predicate(soft_binary(SoftBinaryKind::extended_intersection, f, k),
                                 "subgroup", Quantifier::all)
                      .holds;
  bool and_holds = soft_predicate(soft_binary(SoftBinaryKind::and_op, f, k), "subgroup",
                                  Quantifier::all)
                       .holds;
  report(3, image_ok && eu_fails && ru_fails && or_fails && ri_holds && ei_holds && and_holds,
         "union image at a2 = {0,1,I}; unions/OR fail, intersections/AND hold");
}

void criterion_4_lagrange_taxonomy(const Corpus& corpus) {
  bool all13 = soft_predicate(corpus.softset("ex_2_1_13"), "lagrange", Quantifier::all).holds;
  SoftVerdict v14_all = soft_predicate(corpus.softset("ex_2_1_14"), "lagrange", Quantifier::all);
  SoftVerdict v14_any =
      soft_predicate(corpus.softset("ex_2_1_14"), "lagrange", Quantifier::at_least_one);
  bool weakly14 = !v14_all.holds && v14_any.holds && v14_any.witness == std::string("a2");
  bool free18 = soft_predicate(corpus.softset("ex_2_1_18"), "lagrange", Quantifier::none).holds;
  report(4, all13 && weakly14 && free18,
         "2.1.13 all-Lagrange; 2.1.14 weakly via a2; 2.1.18 Lagrange-free");
}

void criterion_5_pseudo(const Corpus& corpus) {
  bool pseudo7 = soft_predicate(corpus.softset("ex_2_1_7"), "pseudo", Quantifier::all).holds;
  const SoftSet& f8 = corpus.softset("ex_2_1_8");
  SoftVerdict v8 = soft_predicate(f8, "pseudo", Quantifier::all);
  Subset witness{nullptr, Bits(0)};
  bool not_pseudo = !v8.holds && v8.witness == std::string("a1") &&
                    !is_pseudo(std::get<Subset>(*f8.find("a1")), &witness);
  bool witness_ok = sorted_labels(witness) == std::vector<std::string>{"0", "2"};
  report(5, pseudo7 && not_pseudo && witness_ok,
         "2.1.7 soft-pseudo; 2.1.8 fails with proper subgroup {0,2} inside F(a1)");
}

void criterion_6_n_structure(const Corpus& corpus) {
  NStructPtr g = corpus.nstructure("ng_2_3_4");
  const SoftSet& f = corpus.softset("ex_2_3_4");
  const NSubset& p = std::get<NSubset>(*f.find("P"));
  const NSubset& t = std::get<NSubset>(*f.find("T"));
  bool ok = n_order(*g) == 60 && p.total_size() == 10 && t.total_size() == 12 &&
            is_lagrange_sub_n(p) && is_lagrange_sub_n(t);
  report(6, ok, "order 60; |P|=10 and |T|=12 both divide it");
}

void criterion_7_ideals(const Corpus& corpus) {
  const SoftSet& f = corpus.softset("ex_5_1_4");
  bool a2_ideal = is_ideal(std::get<Subset>(*f.find("a2")), IdealSide::two_sided);
  std::string witness;
  bool a1_fails =
      !is_ideal(std::get<Subset>(*f.find("a1")), IdealSide::right, std::nullopt, &witness);
  ClaimEngine engine(corpus);
  const Claim* disc = engine.find("disc-5.1.4-Fa1-ideal");
  bool claim_ok = disc && disc->tag == ClaimTag::discrepancy && disc->fn &&
                  disc->fn(corpus, 0).as_expected;
  report(7, a2_ideal && a1_fails && witness == "3*1=1" && claim_ok,
         "F(a2) two-sided ideal; F(a1) fails right scan at 3*1=1; discrepancy claim replays");
}

void criterion_8_star_product(const Corpus& corpus) {
  const SoftSet& fi = corpus.softset("la6k_ideal_F");
  const SoftSet& ki = corpus.softset("la6k_ideal_K");
  bool inputs = soft_predicate(fi, "ideal-two-sided", Quantifier::all).holds &&
                soft_predicate(ki, "ideal-two-sided", Quantifier::all).holds;
  SoftSet star = star_product(fi, ki);
  bool star_ok = soft_predicate(star, "ideal-two-sided", Quantifier::all).holds;

  const SoftSet& sub = corpus.softset("la6k_sub_F");
  MagmaPtr u = sub.universe().magma;
  bool left_identity = u->profile().left_identities.test(u->require_index("0"));
  bool lemma = soft_equal(soft_product(sub, sub), sub);
  report(8, inputs && star_ok && left_identity && lemma,
         "star product of soft ideals stays a soft ideal; (F,A)o(F,A)=(F,A) with the left identity");
}

void criterion_9_search(const Corpus& corpus) {
  auto t0 = Clock::now();
  auto w1 = search_counterexample(corpus, "extended-union-of-soft-groups", 16, 0);
  double ms = ms_since(t0);
  auto w2 = search_counterexample(corpus, "extended-union-of-soft-groups", 16, 0);
  bool witness_ok = w1 && w2 && w1->universe == w2->universe &&
                    w1->description == w2->description && ms < 1000.0;
  auto none = search_counterexample(corpus, "extended-union-of-soft-ideals", 16, 0);
  report(9, witness_ok && !none,
         "group-union witness in " + std::to_string(ms).substr(0, 5) +
             " ms, identical across runs; ideal search empty");
}

void criterion_10_property_suites(const Corpus& corpus) {
  std::mt19937_64 rng(0);

  // closure laws over random subsets of three fixture universes
  bool closure_ok = true;
  std::vector<MagmaPtr> universes = {corpus.magma("nz4_add"), corpus.magma("la8"),
                                     corpus.magma("nl5_3")};
  for (int i = 0; i < 200 && closure_ok; ++i) {
    MagmaPtr m = universes[i % universes.size()];
    Subset a{m, Bits(m->order())}, b{m, Bits(m->order())};
    for (int j = 0; j < m->order(); ++j) {
      if (rng() & 1) a.bits.set(j);
      if (rng() & 1) b.bits.set(j);
    }
    Subset ca = closure(a);
    Subset merged{m, a.bits | b.bits};
    closure_ok = ca.bits.contains(a.bits) && closure(merged).bits.contains(ca.bits) &&
                 closure(ca).bits == ca.bits;
  }

  // strong => neutrosophic => plain over random N-subsets
  bool monotone_ok = true;
  NStructPtr g = corpus.nstructure("bg_2_2_1");
  for (int i = 0; i < 200; ++i) {
    NSubset s{g, {}};
    bool has_empty = false;
    for (int c = 0; c < g->count(); ++c) {
      MagmaPtr m = g->component(c).magma;
      Subset part{m, Bits(m->order())};
      for (int j = 0; j < m->order(); ++j)
        if (rng() % 3 == 0) part.bits.set(j);
      has_empty = has_empty || part.empty();
      s.parts.push_back(std::move(part));
    }
    if (has_empty) continue;
    bool strong = is_sub_n_structure(s, SubNStrength::strong);
    bool neutro = is_sub_n_structure(s, SubNStrength::neutrosophic);
    bool plain = is_sub_n_structure(s, SubNStrength::plain);
    monotone_ok = monotone_ok && (!strong || neutro) && (!neutro || plain);
  }

  // overlap agreement between restricted and extended operations
  bool overlap_ok = true;
  MagmaPtr nz4 = corpus.magma("nz4_add");
  UniverseRef u{nz4, nullptr};
  for (int i = 0; i < 200 && overlap_ok; ++i) {
    SoftSet f("F", u), k("K", u);
    auto random_subset = [&]() {
      Subset s{nz4, Bits(16)};
      while (s.empty())
        for (int j = 0; j < 16; ++j)
          if (rng() % 4 == 0) s.bits.set(j);
      return s;
    };
    f.add("a1", SoftImage{random_subset()});
    f.add("a2", SoftImage{random_subset()});
    k.add("a2", SoftImage{random_subset()});
    k.add("a3", SoftImage{random_subset()});
    SoftSet ri = soft_binary(SoftBinaryKind::restricted_intersection, f, k, true);
    SoftSet ei = soft_binary(SoftBinaryKind::extended_intersection, f, k, true);
    SoftSet ru = soft_binary(SoftBinaryKind::restricted_union, f, k);
    SoftSet eu = soft_binary(SoftBinaryKind::extended_union, f, k);
    for (int j = 0; j < ri.size(); ++j)
      overlap_ok = overlap_ok && image_equal(ri.image(j), *ei.find(ri.param(j)));
    for (int j = 0; j < ru.size(); ++j)
      overlap_ok = overlap_ok && image_equal(ru.image(j), *eu.find(ru.param(j)));
  }

  // prime-order collapse on Z5, exhaustive plus random soft families
  bool collapse_ok = true;
  MagmaPtr z5 = corpus.magma("z5");
  for (uint32_t mask = 1; mask < 32; ++mask) {
    Subset s{z5, Bits(5)};
    for (int j = 0; j < 5; ++j)
      if (mask & (1u << j)) s.bits.set(j);
    if (is_subgroup(s)) collapse_ok = collapse_ok && (s.count() == 1 || s.count() == 5);
  }
  UniverseRef u5{z5, nullptr};
  for (int i = 0; i < 200 && collapse_ok; ++i) {
    Subset img = (rng() & 1) ? full_subset(z5) : subset_of_labels(z5, {"0"});
    SoftSet f("F", u5);
    f.add("a1", SoftImage{img});
    if (soft_predicate(f, "subgroup", Quantifier::all).holds) {
      IdentityAbsolute cls = soft_identity_or_absolute(f);
      collapse_ok = collapse_ok &&
                    (cls == IdentityAbsolute::identity || cls == IdentityAbsolute::absolute);
    }
  }

  report(10, closure_ok && monotone_ok && overlap_ok && collapse_ok,
         "closure laws, strength monotonicity, overlap agreement, prime collapse (200 cases each)");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  Corpus corpus(fixtures_dir());

  criterion_1_table_fidelity(corpus);
  criterion_2_rosters(corpus);
  criterion_3_counterexample_replay(corpus);
  criterion_4_lagrange_taxonomy(corpus);
  criterion_5_pseudo(corpus);
  criterion_6_n_structure(corpus);
  criterion_7_ideals(corpus);
  criterion_8_star_product(corpus);
  criterion_9_search(corpus);
  criterion_10_property_suites(corpus);

  // the full bundled claim corpus has to finish inside the overall budget
  ClaimEngine engine(corpus);
  Report r = run_paper_suite(engine, "", 0);
  double total_s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool suite_ok = r.all_passed() && total_s < 60.0;
  std::printf("paper suite : %s  %d/%zu claims in %.2f s total\n", suite_ok ? "PASS" : "FAIL",
              r.passed(), r.entries.size(), total_s);
  if (!suite_ok) ++failures;

  std::printf("%s (%d criteria failed)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
