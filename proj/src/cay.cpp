#include "nsalg/cay.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nsalg/loops.hpp"
#include "nsalg/neutro.hpp"

namespace nsalg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

// Meaningful lines: comments and blanks dropped.
std::vector<std::vector<std::string>> logical_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    out.push_back(tokenize(line));
  }
  return out;
}

struct ParsedCay {
  std::string name;
  std::vector<std::vector<std::string>> body;  // everything between header and `end`
};

ParsedCay split_cay(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty() || lines.front().size() != 2 || lines.front()[0] != "magma")
    fail(Err::ParseError, "expected 'magma <name>' header");
  if (lines.back().size() != 1 || lines.back()[0] != "end")
    fail(Err::ParseError, "expected final 'end' line");
  ParsedCay p;
  p.name = lines.front()[1];
  p.body.assign(lines.begin() + 1, lines.end() - 1);
  return p;
}

MagmaPtr from_table_form(const ParsedCay& p) {
  size_t at = 0;
  auto next = [&]() -> const std::vector<std::string>& {
    if (at >= p.body.size()) fail(Err::ParseError, "truncated magma '" + p.name + "'");
    return p.body[at++];
  };

  const auto& elems = next();
  if (elems.empty() || elems[0] != "elements")
    fail(Err::ParseError, "expected 'elements' line in magma '" + p.name + "'");
  std::vector<std::string> labels(elems.begin() + 1, elems.end());
  const size_t n = labels.size();
  if (n == 0) fail(Err::ShapeError, "magma '" + p.name + "' declares no elements");
  for (const auto& l : labels) {
    for (char ch : l)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '+' && ch != '.' &&
          ch != '_' && ch != '-')
        fail(Err::ParseError, "label '" + l + "' has characters outside [A-Za-z0-9+._-]");
  }

  std::vector<std::string> indet_labels;
  const auto* line = &next();
  if (!line->empty() && (*line)[0] == "neutro") {
    indet_labels.assign(line->begin() + 1, line->end());
    line = &next();
  }
  if (line->size() != 1 || (*line)[0] != "table")
    fail(Err::ParseError, "expected 'table' line in magma '" + p.name + "'");

  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      fail(Err::DuplicateLabel, "label '" + labels[i] + "' in magma '" + p.name + "'");
  }

  std::vector<int32_t> table;
  table.reserve(n * n);
  for (size_t r = 0; r < n; ++r) {
    const auto& row = next();
    if (row.size() != n)
      fail(Err::ShapeError, "row " + std::to_string(r + 1) + " of magma '" + p.name + "' has " +
                                std::to_string(row.size()) + " cells, expected " +
                                std::to_string(n));
    for (const auto& cell : row) {
      auto it = index.find(cell);
      if (it == index.end())
        fail(Err::UnknownElement, "table cell '" + cell + "' in magma '" + p.name + "'");
      table.push_back(it->second);
    }
  }
  if (at != p.body.size())
    fail(Err::ShapeError, "magma '" + p.name + "' has " + std::to_string(p.body.size() - at) +
                              " extra rows");

  std::optional<NeutroInfo> info;
  if (!indet_labels.empty()) {
    NeutroInfo ni;
    ni.mode = NeutroMode::adjoin;
    ni.real.assign(n, 0);
    ni.indet.assign(n, 0);
    for (const auto& l : indet_labels) {
      auto it = index.find(l);
      if (it == index.end())
        fail(Err::UnknownElement, "neutro label '" + l + "' in magma '" + p.name + "'");
      ni.indet[it->second] = 1;
    }
    for (size_t i = 0; i < n; ++i) ni.real[i] = static_cast<int32_t>(i);
    info = std::move(ni);
  }
  return std::make_shared<FiniteMagma>(p.name, std::move(labels), std::move(table),
                                       std::move(info));
}

MagmaPtr rename(MagmaPtr m, const std::string& name) {
  if (m->name() == name) return m;
  std::optional<NeutroInfo> info;
  if (m->is_neutrosophic()) info = m->neutro();
  std::vector<int32_t> table;
  table.reserve(static_cast<size_t>(m->order()) * m->order());
  for (int x = 0; x < m->order(); ++x)
    for (int y = 0; y < m->order(); ++y) table.push_back(m->at(x, y));
  return std::make_shared<FiniteMagma>(name, m->labels(), std::move(table), std::move(info));
}

MagmaPtr from_directive(const ParsedCay& p, const std::filesystem::path* dir) {
  const auto& d = p.body[0];
  if (d.size() == 4 && d[0] == "loop" && d[1] == "L") {
    LoopParams lp{std::stoi(d[2]), std::stoi(d[3])};
    return rename(build_loop(lp), p.name);
  }
  if (d.size() == 4 && d[0] == "neutrosophic" && d[1] == "ring") {
    RingKind kind;
    if (d[3] == "add") kind = RingKind::additive;
    else if (d[3] == "mul") kind = RingKind::multiplicative;
    else fail(Err::ParseError, "ring kind must be add or mul, got '" + d[3] + "'");
    return rename(ring_extension(std::stoi(d[2]), kind), p.name);
  }
  if (d.size() == 4 && d[0] == "neutrosophic" && d[1] == "adjoin" && d[2] == "of") {
    if (!dir) fail(Err::ParseError, "adjoin-of directive needs a file context");
    return rename(adjoin_indeterminate(load_magma_file(*dir / d[3])), p.name);
  }
  fail(Err::ParseError, "unrecognized directive in magma '" + p.name + "'");
}

bool is_directive(const ParsedCay& p) {
  return p.body.size() == 1 && !p.body[0].empty() &&
         (p.body[0][0] == "loop" || p.body[0][0] == "neutrosophic");
}

}  // namespace

MagmaPtr parse_magma(const std::string& text) {
  ParsedCay p = split_cay(text);
  if (is_directive(p)) return from_directive(p, nullptr);
  return from_table_form(p);
}

MagmaPtr load_magma_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ParsedCay p = split_cay(buf.str());
  if (is_directive(p)) {
    auto dir = path.parent_path();
    return from_directive(p, &dir);
  }
  return from_table_form(p);
}

std::string format_magma(const FiniteMagma& m) {
  std::ostringstream out;
  out << "magma " << m.name() << "\n";
  out << "elements";
  for (const auto& l : m.labels()) out << ' ' << l;
  out << "\n";
  if (m.is_neutrosophic()) {
    const auto& info = m.neutro();
    bool any = false;
    for (int i = 0; i < m.order(); ++i)
      if (info.indet[i]) {
        out << (any ? " " : "neutro ") << m.label(i);
        any = true;
      }
    if (any) out << "\n";
  }
  out << "table\n";
  for (int x = 0; x < m.order(); ++x) {
    for (int y = 0; y < m.order(); ++y) out << (y ? " " : "") << m.label(m.at(x, y));
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace nsalg
