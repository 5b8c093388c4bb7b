#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "json.hpp"

namespace faclab::cli {

inline constexpr int kSchemaVersion = 1;

/// Current UTC time as RFC 3339, e.g. "2026-10-17T08:15:02Z".
std::string utc_timestamp();

/// {"schema_version":1,"kind":...,"params":{...},"result":{...},"timestamp":...}
nlohmann::json make_record(const std::string& kind, const nlohmann::json& params, const nlohmann::json& result);

/// Append-only JSONL file of scan records keyed by (kind, params). Existing
/// records are loaded on open so callers can skip work already done.
class ScanStore {
 public:
  /// Throws std::runtime_error if the file cannot be opened for appending.
  explicit ScanStore(const std::filesystem::path& path);

  static std::string key(const std::string& kind, const nlohmann::json& params);

  /// The stored result for (kind, params), or nullptr.
  const nlohmann::json* find(const std::string& kind, const nlohmann::json& params) const;
  std::size_t size() const { return results_.size(); }
  std::size_t skipped_lines() const { return skipped_lines_; }

  /// Writes and flushes one record. Duplicate keys are ignored.
  void append(const std::string& kind, const nlohmann::json& params, const nlohmann::json& result);

 private:
  std::ofstream out_;
  std::map<std::string, nlohmann::json> results_;
  std::size_t skipped_lines_ = 0;
};

}  // namespace faclab::cli
