#include "faclab/cli/scan_store.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace faclab::cli {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

nlohmann::json make_record(const std::string& kind, const nlohmann::json& params, const nlohmann::json& result) {
  return nlohmann::json{{"schema_version", kSchemaVersion},
                        {"kind", kind},
                        {"params", params},
                        {"result", result},
                        {"timestamp", utc_timestamp()}};
}

ScanStore::ScanStore(const std::filesystem::path& path) {
  bool needs_newline = false;
  if (std::ifstream in(path); in) {
    std::string line;
    while (std::getline(in, line)) {
      needs_newline = !in.eof() ? false : !line.empty();
      if (line.empty()) continue;
      // A torn final line from an interrupted run is skipped and recomputed.
      auto record = nlohmann::json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.contains("kind") || !record.contains("params") ||
          !record.contains("result")) {
        ++skipped_lines_;
        continue;
      }
      results_[key(record["kind"].get<std::string>(), record["params"])] = record["result"];
    }
  }
  out_.open(path, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open output file for writing: " + path.string());
  // Start new records on a fresh line after a torn final line.
  if (needs_newline) out_ << '\n';
}

std::string ScanStore::key(const std::string& kind, const nlohmann::json& params) { return kind + "|" + params.dump(); }

const nlohmann::json* ScanStore::find(const std::string& kind, const nlohmann::json& params) const {
  auto it = results_.find(key(kind, params));
  return it == results_.end() ? nullptr : &it->second;
}

void ScanStore::append(const std::string& kind, const nlohmann::json& params, const nlohmann::json& result) {
  auto [it, inserted] = results_.try_emplace(key(kind, params), result);
  if (!inserted) return;
  out_ << make_record(kind, params, result).dump() << '\n';
  out_.flush();
  if (!out_) throw std::runtime_error("write to output file failed");
}

}  // namespace faclab::cli
