#pragma once

#include <filesystem>
#include <map>

#include "nsalg/cay.hpp"
#include "nsalg/softset.hpp"

namespace nsalg {

// Fixture tree: <name>.cay, <name>.nstr, <name>.soft files resolved by name
// and cached; soft-set universes resolve against the same tree.
class Corpus {
 public:
  explicit Corpus(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  MagmaPtr magma(const std::string& name) const;
  NStructPtr nstructure(const std::string& name) const;
  UniverseRef universe(const std::string& name) const;
  const SoftSet& softset(const std::string& name) const;

  // FNV-1a over sorted fixture file names and contents.
  uint64_t checksum() const;

 private:
  std::string read_file(const std::string& name, const char* ext) const;

  std::filesystem::path dir_;
  mutable std::map<std::string, MagmaPtr> magmas_;
  mutable std::map<std::string, NStructPtr> nstructs_;
  mutable std::map<std::string, SoftSet> softsets_;
};

}  // namespace nsalg
