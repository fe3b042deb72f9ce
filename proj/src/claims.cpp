#include "nsalg/claims.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nsalg {

ClaimTag claim_tag_from_string(const std::string& s) {
  if (s == "positive") return ClaimTag::positive;
  if (s == "negative") return ClaimTag::negative;
  if (s == "discrepancy") return ClaimTag::discrepancy;
  if (s == "surrogate") return ClaimTag::surrogate;
  if (s == "untestable-as-stated" || s == "untestable") return ClaimTag::untestable;
  fail(Err::CorpusCorrupt, "unknown claim tag '" + s + "'");
}

const char* to_string(ClaimTag t) {
  switch (t) {
    case ClaimTag::positive: return "positive";
    case ClaimTag::negative: return "negative";
    case ClaimTag::discrepancy: return "discrepancy";
    case ClaimTag::surrogate: return "surrogate";
    case ClaimTag::untestable: return "untestable-as-stated";
  }
  return "?";
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

ClaimEngine::ClaimEngine(const Corpus& corpus) : corpus_(corpus) {
  auto path = corpus.dir() / "claims_registry.tsv";
  std::ifstream in(path);
  if (!in) fail(Err::CorpusCorrupt, "missing claim registry '" + path.string() + "'");

  auto checks = build_claim_checks();
  std::set<std::string> ids, statements, bound;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 4)
      fail(Err::CorpusCorrupt, "registry line needs id<TAB>statement<TAB>tag<TAB>note: " + line);
    Claim c;
    c.id = f[0];
    c.statement = f[1];
    c.tag = claim_tag_from_string(f[2]);
    c.note = f[3];
    if (!ids.insert(c.id).second) fail(Err::CorpusCorrupt, "duplicate claim id '" + c.id + "'");
    if (!c.statement.empty() && !statements.insert(c.statement).second)
      fail(Err::CorpusCorrupt, "statement '" + c.statement + "' registered twice");
    if ((c.tag == ClaimTag::discrepancy || c.tag == ClaimTag::untestable) && c.note.empty())
      fail(Err::CorpusCorrupt, "claim '" + c.id + "' needs a prose note for its tag");
    auto it = checks.find(c.id);
    if (it != checks.end()) {
      c.fn = it->second;
      bound.insert(c.id);
    } else if (c.tag != ClaimTag::untestable) {
      fail(Err::ClaimError, "claim '" + c.id + "' is tagged " + to_string(c.tag) +
                                " but has no executable check");
    }
    claims_.push_back(std::move(c));
  }
  for (const auto& [id, fn] : checks)
    if (!bound.count(id)) fail(Err::ClaimError, "check '" + id + "' has no registry row");
  std::sort(claims_.begin(), claims_.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });
}

const Claim* ClaimEngine::find(const std::string& id) const {
  for (const auto& c : claims_)
    if (c.id == id) return &c;
  return nullptr;
}

int Report::passed() const {
  int n = 0;
  for (const auto& e : entries) n += e.pass ? 1 : 0;
  return n;
}

namespace {

bool glob_match(const std::string& pattern, const std::string& text) {
  if (pattern.empty()) return true;
  if (pattern.find('*') == std::string::npos) return text.find(pattern) != std::string::npos;
  // Greedy segment match over '*' wildcards.
  size_t t = 0;
  bool anchored = pattern.front() != '*';
  std::vector<std::string> segs;
  std::string cur;
  for (char c : pattern) {
    if (c == '*') {
      if (!cur.empty()) segs.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) segs.push_back(cur);
  for (size_t i = 0; i < segs.size(); ++i) {
    size_t pos = text.find(segs[i], t);
    if (pos == std::string::npos) return false;
    if (i == 0 && anchored && pos != 0) return false;
    t = pos + segs[i].size();
  }
  if (pattern.back() != '*' && !segs.empty()) {
    if (text.size() < segs.back().size() ||
        text.compare(text.size() - segs.back().size(), segs.back().size(), segs.back()) != 0)
      return false;
  }
  return true;
}

}  // namespace

Report run_paper_suite(const ClaimEngine& engine, const std::string& filter, uint64_t seed) {
  Report r;
  r.corpus_checksum = engine.corpus().checksum();
  r.seed = seed;
  for (const auto& c : engine.claims()) {
    if (!glob_match(filter, c.id)) continue;
    ReportEntry e;
    e.id = c.id;
    e.tag = c.tag;
    if (!c.fn) {
      e.pass = true;  // recorded, nothing to execute
      e.detail = "recorded: " + c.note;
      e.millis = 0.0;
    } else {
      auto t0 = std::chrono::steady_clock::now();
      try {
        ClaimResult res = c.fn(engine.corpus(), seed);
        e.pass = res.as_expected;
        e.detail = res.detail;
      } catch (const Error& err) {
        e.pass = false;
        e.detail = std::string("claim aborted: ") + err.what();
      }
      e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

namespace {

std::string hex64(uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string render_report_text(const Report& r) {
  std::ostringstream out;
  double total_ms = 0;
  for (const auto& e : r.entries) total_ms += e.millis;
  out << "paper suite: " << r.passed() << "/" << r.entries.size() << " claims as expected"
      << "  (engine " << r.engine_version << ", corpus " << hex64(r.corpus_checksum) << ", seed "
      << r.seed << ", " << static_cast<long>(total_ms) << " ms)\n";
  for (const auto& e : r.entries) {
    out << (e.pass ? "PASS " : "FAIL ");
    out << e.id;
    for (size_t i = e.id.size(); i < 40; ++i) out << ' ';
    out << ' ' << to_string(e.tag);
    for (size_t i = std::string(to_string(e.tag)).size(); i < 22; ++i) out << ' ';
    char ms[16];
    snprintf(ms, sizeof ms, "%7.2fms", e.millis);
    out << ms << "  " << e.detail << "\n";
  }
  return out.str();
}

std::string render_report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["engine"] = r.engine_version;
  j["corpus_checksum"] = hex64(r.corpus_checksum);
  j["seed"] = r.seed;
  j["total"] = r.entries.size();
  j["passed"] = r.passed();
  auto claims = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json c;
    c["id"] = e.id;
    c["tag"] = to_string(e.tag);
    c["pass"] = e.pass;
    c["detail"] = e.detail;
    claims.push_back(std::move(c));
  }
  j["claims"] = std::move(claims);
  return j.dump(2) + "\n";
}

}  // namespace nsalg
