#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "core/slabel.hpp"

namespace graphfp {

class StoreError : public std::runtime_error {
 public:
  StoreError(const std::string& what, size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

struct IndexRecord {
  Fingerprint fingerprint;
  std::string id;
  std::string source;
};

// Append-only fingerprint index. On disk: a version header line followed by
// one TSV record per graph (`fingerprint line \t id \t source`). All records
// share the hash version declared in the header.
class IndexStore {
 public:
  IndexStore() = default;

  static IndexStore load(const std::string& path);
  void save(const std::string& path) const;

  void append(const IndexRecord& record);

  // Ids of records whose method descriptor and digest64 match; when both
  // sides carry wide digests, those must match too.
  std::vector<std::string> query(const Fingerprint& fp) const;

  const std::vector<IndexRecord>& records() const { return records_; }

 private:
  std::vector<IndexRecord> records_;
};

}  // namespace graphfp
