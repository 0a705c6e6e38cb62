#include "core/index_store.hpp"

#include <fstream>
#include <sstream>

namespace graphfp {

namespace {

constexpr const char* kMagic = "graphfp-index";
constexpr int kFormatVersion = 1;

}  // namespace

IndexStore IndexStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open index store: " + path);
  std::string line;
  size_t lineno = 0;
  if (!std::getline(in, line)) throw StoreError("empty index store: " + path);
  ++lineno;
  {
    std::istringstream hdr(line);
    std::string magic, hashver;
    int fmt = 0;
    if (!(hdr >> magic >> fmt >> hashver) || magic != kMagic)
      throw StoreError("not an index store header", lineno);
    if (fmt != kFormatVersion)
      throw StoreError("unsupported index format version " + std::to_string(fmt), lineno);
    if (hashver != kHashVersion)
      throw StoreError("hash version mismatch: store has " + hashver + ", this build uses " +
                           std::string(kHashVersion),
                       lineno);
  }
  IndexStore store;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw StoreError("corrupt record", lineno);
    IndexRecord rec;
    try {
      rec.fingerprint = Fingerprint::parse_line(line.substr(0, t1));
    } catch (const ArgumentError& e) {
      throw StoreError(std::string("corrupt record: ") + e.what(), lineno);
    }
    rec.id = line.substr(t1 + 1, t2 - t1 - 1);
    rec.source = line.substr(t2 + 1);
    if (rec.id.empty()) throw StoreError("corrupt record: empty id", lineno);
    store.records_.push_back(std::move(rec));
  }
  return store;
}

void IndexStore::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw StoreError("cannot write index store: " + path);
  out << kMagic << ' ' << kFormatVersion << ' ' << kHashVersion << '\n';
  for (const auto& rec : records_)
    out << rec.fingerprint.line() << '\t' << rec.id << '\t' << rec.source << '\n';
  if (!out) throw StoreError("write failed: " + path);
}

void IndexStore::append(const IndexRecord& record) {
  if (record.fingerprint.method.hash_version != kHashVersion)
    throw StoreError("record hash version mismatch");
  if (record.id.empty()) throw StoreError("record id must not be empty");
  records_.push_back(record);
}

std::vector<std::string> IndexStore::query(const Fingerprint& fp) const {
  std::vector<std::string> ids;
  for (const auto& rec : records_) {
    if (!(rec.fingerprint.method == fp.method)) continue;
    if (rec.fingerprint.digest64 != fp.digest64) continue;
    if (rec.fingerprint.wide && fp.wide && *rec.fingerprint.wide != *fp.wide) continue;
    ids.push_back(rec.id);
  }
  return ids;
}

}  // namespace graphfp
