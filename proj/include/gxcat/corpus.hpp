#pragma once

// Bundled example corpus: manifest.json lists each entry with a 64-bit FNV-1a checksum.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "gxcat/errors.hpp"
#include "gxcat/io.hpp"

#ifndef GXCAT_CORPUS_DIR
#define GXCAT_CORPUS_DIR "corpus"
#endif

namespace gxcat {

struct CorpusEntry {
  std::string name;
  std::string kind;     // group | cocycle | ring | pointed
  std::string path;     // relative to the corpus directory
  std::string goldens;  // relative path, may be empty
  std::string checksum;
};

inline std::filesystem::path default_corpus_dir() { return GXCAT_CORPUS_DIR; }

inline std::string checksum_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string file_checksum(const std::filesystem::path& p) { return checksum_hex(io::fnv1a(io::read_file(p))); }

/// Reads the manifest and verifies every checksum; a mismatch is a validation error.
inline std::vector<CorpusEntry> corpus_list(const std::filesystem::path& dir = default_corpus_dir()) {
  const auto manifest = io::load_json(dir / "manifest.json");
  std::vector<CorpusEntry> out;
  for (const auto& e : io::require(manifest, "entries", "manifest")) {
    CorpusEntry c;
    c.name = io::as_string(io::require(e, "name", "manifest.entries"), "manifest.entries.name");
    c.kind = io::as_string(io::require(e, "kind", "manifest.entries"), "manifest.entries.kind");
    c.path = io::as_string(io::require(e, "path", "manifest.entries"), "manifest.entries.path");
    c.goldens = e.contains("goldens") ? io::as_string(e["goldens"], "manifest.entries.goldens") : "";
    c.checksum = io::as_string(io::require(e, "fnv1a", "manifest.entries"), "manifest.entries.fnv1a");
    const auto actual = file_checksum(dir / c.path);
    if (actual != c.checksum)
      fail(ErrorKind::validation, "corpus integrity: checksum mismatch for '" + c.path + "' (manifest " + c.checksum +
                                      ", file " + actual + ")");
    out.push_back(std::move(c));
  }
  return out;
}

/// Recomputes the checksums of the listed entries in place.
inline void rehash_corpus(const std::filesystem::path& dir = default_corpus_dir()) {
  auto manifest = io::load_json(dir / "manifest.json");
  for (auto& e : manifest["entries"]) e["fnv1a"] = file_checksum(dir / e["path"].get<std::string>());
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
}

}  // namespace gxcat
