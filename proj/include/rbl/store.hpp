#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbl/io.hpp"

namespace rbl {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kStoreEnv = "RBL_STORE";

struct RecordKey {
  int n = 0;
  int s = 0;
  int t = 0;
  int q = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  auto operator<=>(const RecordKey&) const = default;
};

struct ResultRecord {
  RecordKey key;
  Json payload;
  std::string timestamp;
};

auto to_json(const RecordKey& k) -> Json;
auto record_to_json(const ResultRecord& r) -> Json;
auto record_from_json(const Json& j) -> ResultRecord;

auto utc_timestamp() -> std::string;

// RBL_STORE wins over the flag value.
auto resolve_store_path(const std::optional<std::string>& flag) -> std::optional<std::string>;

void append_record(const std::string& path, const ResultRecord& rec);

struct StoreContents {
  std::vector<ResultRecord> records;  // file order
  std::vector<std::string> warnings;
};

// A missing file is an empty store.
auto load_store(const std::string& path) -> StoreContents;

struct ReportRow {
  RecordKey key;
  std::string status;
  std::optional<int> value;
  int lo = 0;
  int hi = 0;
  Json predictions;
  std::string agreement;  // mismatch | agree | inconclusive | no-formula
};

// Latest exact record per key, mismatches first.
auto build_report(const StoreContents& store) -> std::vector<ReportRow>;
auto to_json(const ReportRow& row) -> Json;

}  // namespace rbl
