#include "gasket/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <thread>

#include "json.hpp"

namespace gasket {

namespace {

using nlohmann::json;

// Exclusive-create lock file; writers serialize, readers never block.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& target)
      : path_(target.string() + ".lock") {
    for (int attempt = 0; attempt < 100; ++attempt) {
      fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd_ >= 0) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    throw std::runtime_error("could not acquire cache lock " + path_);
  }

  ~FileLock() {
    if (fd_ >= 0) {
      ::close(fd_);
      ::unlink(path_.c_str());
    }
  }

  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace

LengthCache::LengthCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path LengthCache::file_for(Geometry g, int level) const {
  return dir_ / (std::string(to_string(g)) + "-level" + std::to_string(level) +
                 ".json");
}

std::string LengthCache::entry_key(const EdgeId& e, int refine) {
  return e.cell.str() + "/" + to_string(e.side) + "/" + std::to_string(refine);
}

LengthCache::Document& LengthCache::document(Geometry g, int level) const {
  const std::string name = file_for(g, level).filename().string();
  Document& doc = docs_[name];
  if (doc.loaded) return doc;
  doc.loaded = true;
  const auto path = file_for(g, level);
  std::ifstream in(path);
  if (!in) return doc;
  try {
    const json j = json::parse(in);
    if (j.value("version", "") != kArtifactVersion) return doc;  // stale
    for (const auto& [key, value] : j.at("entries").items()) {
      doc.entries[key] = value.get<double>();
    }
  } catch (const json::exception&) {
    doc.entries.clear();  // unreadable documents are recomputed
  }
  return doc;
}

std::optional<double> LengthCache::lookup(Geometry g, int level,
                                          const EdgeId& e, int refine) const {
  if (!enabled()) return std::nullopt;
  const Document& doc = document(g, level);
  const auto it = doc.entries.find(entry_key(e, refine));
  if (it == doc.entries.end()) return std::nullopt;
  return it->second;
}

void LengthCache::put(Geometry g, int level, const EdgeId& e, int refine,
                      double value) {
  if (!enabled()) return;
  Document& doc = document(g, level);
  auto [it, inserted] = doc.entries.emplace(entry_key(e, refine), value);
  if (!inserted && it->second == value) return;
  it->second = value;
  doc.dirty = true;
}

void LengthCache::flush() {
  if (!enabled()) return;
  for (auto& [name, doc] : docs_) {
    if (!doc.dirty) continue;
    const auto path = dir_ / name;
    FileLock lock(path);
    json j;
    j["version"] = kArtifactVersion;
    json entries = json::object();
    for (const auto& [key, value] : doc.entries) entries[key] = value;
    j["entries"] = entries;
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(1) << "\n";
      if (!out) throw std::runtime_error("cache write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
    doc.dirty = false;
  }
}

}  // namespace gasket
