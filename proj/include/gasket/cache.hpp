#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "gasket/vertex.hpp"

namespace gasket {

/// On-disk cache of harmonic edge lengths. One JSON document per
/// (geometry, level), entries keyed "word/side/refine", stamped with the
/// artifact version; stale versions are discarded on load. Writes go through
/// a lock file and a rename so concurrent readers never see a torn document.
class LengthCache {
 public:
  LengthCache() = default;  // disabled
  explicit LengthCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<double> lookup(Geometry g, int level, const EdgeId& e,
                               int refine) const;
  void put(Geometry g, int level, const EdgeId& e, int refine, double value);

  // Persist dirty documents.
  void flush();

  std::filesystem::path file_for(Geometry g, int level) const;
  static std::string entry_key(const EdgeId& e, int refine);

 private:
  struct Document {
    bool loaded = false;
    bool dirty = false;
    std::map<std::string, double> entries;
  };

  Document& document(Geometry g, int level) const;

  std::filesystem::path dir_;
  mutable std::map<std::string, Document> docs_;  // by file name
};

}  // namespace gasket
