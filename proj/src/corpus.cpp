#include "nsalg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nsalg {

std::string Corpus::read_file(const std::string& name, const char* ext) const {
  auto path = dir_ / (name + ext);
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open fixture '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MagmaPtr Corpus::magma(const std::string& name) const {
  auto it = magmas_.find(name);
  if (it != magmas_.end()) return it->second;
  MagmaPtr m = load_magma_file(dir_ / (name + ".cay"));
  if (m->name() != name)
    fail(Err::CorpusCorrupt, "fixture file '" + name + ".cay' declares magma '" + m->name() + "'");
  magmas_.emplace(name, m);
  return m;
}

NStructPtr Corpus::nstructure(const std::string& name) const {
  auto it = nstructs_.find(name);
  if (it != nstructs_.end()) return it->second;
  NStructPtr s = parse_nstructure(read_file(name, ".nstr"),
                                  [this](const std::string& n) { return magma(n); });
  if (s->name() != name)
    fail(Err::CorpusCorrupt, "fixture file '" + name + ".nstr' declares structure '" + s->name() +
                                 "'");
  nstructs_.emplace(name, s);
  return s;
}

UniverseRef Corpus::universe(const std::string& name) const {
  if (std::filesystem::exists(dir_ / (name + ".cay"))) return UniverseRef{magma(name), nullptr};
  if (std::filesystem::exists(dir_ / (name + ".nstr")))
    return UniverseRef{nullptr, nstructure(name)};
  fail(Err::IoError, "no fixture named '" + name + "' (.cay or .nstr) in " + dir_.string());
}

const SoftSet& Corpus::softset(const std::string& name) const {
  auto it = softsets_.find(name);
  if (it != softsets_.end()) return it->second;
  SoftSet f = parse_softset(read_file(name, ".soft"),
                            [this](const std::string& n) { return universe(n); });
  return softsets_.emplace(name, std::move(f)).first->second;
}

uint64_t Corpus::checksum() const {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension();
    if (ext == ".cay" || ext == ".soft" || ext == ".nstr" || ext == ".tsv")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& f : files) {
    mix(f.filename().string());
    std::ifstream in(f, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    mix(buf.str());
  }
  return h;
}

}  // namespace nsalg
