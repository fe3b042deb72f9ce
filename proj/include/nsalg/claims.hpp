#pragma once

#include <optional>

#include "nsalg/corpus.hpp"

namespace nsalg {

inline constexpr const char* kEngineVersion = "nsalg 1.0.0";

enum class ClaimTag { positive, negative, discrepancy, surrogate, untestable };

ClaimTag claim_tag_from_string(const std::string& s);
const char* to_string(ClaimTag t);

// Outcome of one executable claim: did the registered expectation hold, and
// what was observed (a witness, a failing parameter, a recorded mismatch).
struct ClaimResult {
  bool as_expected = false;
  std::string detail;
};

using ClaimFn = std::function<ClaimResult(const Corpus&, uint64_t seed)>;

struct Claim {
  std::string id;
  std::string statement;  // the source statement this row covers
  ClaimTag tag;
  std::string note;
  ClaimFn fn;  // empty for untestable-as-stated rows
};

// Claim list as data: ids and tags come from fixtures/claims_registry.tsv,
// executable checks are bound by id in the engine. Construction fails if a
// non-untestable row has no check, a check has no row, a tag is invalid, or
// ids/statements repeat.
class ClaimEngine {
 public:
  explicit ClaimEngine(const Corpus& corpus);

  const std::vector<Claim>& claims() const { return claims_; }
  const Claim* find(const std::string& id) const;
  const Corpus& corpus() const { return corpus_; }

 private:
  const Corpus& corpus_;
  std::vector<Claim> claims_;
};

// Binds every executable check; defined in claims_checks.cpp.
std::map<std::string, ClaimFn> build_claim_checks();

struct ReportEntry {
  std::string id;
  ClaimTag tag;
  bool pass;
  std::string detail;
  double millis;
};

struct Report {
  std::vector<ReportEntry> entries;  // ordered by claim id
  uint64_t corpus_checksum = 0;
  uint64_t seed = 0;
  std::string engine_version = kEngineVersion;

  int passed() const;
  bool all_passed() const { return passed() == static_cast<int>(entries.size()); }
};

Report run_paper_suite(const ClaimEngine& engine, const std::string& filter, uint64_t seed);

std::string render_report_text(const Report& r);
// Machine rendering; deterministic byte-for-byte for a fixed corpus and
// seed, so per-claim timings are deliberately left out.
std::string render_report_json(const Report& r);

struct Witness {
  std::string universe;
  std::string description;  // replayable rendering of the failing instance
};

// Deterministic first-witness search in canonical order (universe size
// ascending, then subsets lexicographic). Claims with closure expectations
// come back empty when the bound is exhausted.
std::optional<Witness> search_counterexample(const Corpus& corpus, const std::string& claim_id,
                                             int max_carrier, uint64_t seed);

bool has_search_family(const std::string& claim_id);

}  // namespace nsalg
