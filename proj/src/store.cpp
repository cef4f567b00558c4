#include "rbl/store.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>

#include "rbl/bounds.hpp"
#include "rbl/error.hpp"
#include "rbl/serialize.hpp"

namespace rbl {

auto to_json(const RecordKey& k) -> Json {
  return Json{{"n", k.n}, {"s", k.s}, {"t", k.t}, {"q", k.q}, {"mode", k.mode}, {"seed", k.seed},
              {"tool_version", k.tool_version}};
}

auto record_to_json(const ResultRecord& r) -> Json {
  return Json{{"key", to_json(r.key)}, {"payload", r.payload}, {"timestamp", r.timestamp}};
}

auto record_from_json(const Json& j) -> ResultRecord {
  try {
    const Json& k = j.at("key");
    ResultRecord r;
    r.key.n = k.at("n").get<int>();
    r.key.s = k.at("s").get<int>();
    r.key.t = k.at("t").get<int>();
    r.key.q = k.at("q").get<int>();
    r.key.mode = k.at("mode").get<std::string>();
    r.key.seed = k.at("seed").get<std::uint64_t>();
    r.key.tool_version = k.at("tool_version").get<std::string>();
    r.payload = j.at("payload");
    if (!r.payload.is_object()) throw InputError("record payload must be an object");
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed record: ") + e.what());
  }
}

auto utc_timestamp() -> std::string {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

auto resolve_store_path(const std::optional<std::string>& flag) -> std::optional<std::string> {
  if (const char* env = std::getenv(kStoreEnv); env != nullptr && *env != '\0') return std::string(env);
  return flag;
}

void append_record(const std::string& path, const ResultRecord& rec) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ResourceError("cannot open store " + path);
  out << record_to_json(rec).dump() << '\n';
  if (!out) throw ResourceError("cannot append to store " + path);
}

auto load_store(const std::string& path) -> StoreContents {
  StoreContents out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.records.push_back(record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      out.warnings.push_back("skipping corrupt record at line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

auto build_report(const StoreContents& store) -> std::vector<ReportRow> {
  std::map<RecordKey, const ResultRecord*> latest;
  for (const auto& r : store.records) {
    if (r.key.mode == "exact") latest[r.key] = &r;
  }
  std::vector<ReportRow> mismatched;
  std::vector<ReportRow> rest;
  for (const auto& [key, rec] : latest) {
    ReportRow row;
    row.key = key;
    const Json& p = rec->payload;
    row.status = p.value("status", std::string("unknown"));
    row.lo = p.value("lo", 0);
    row.hi = p.value("hi", 0);
    if (p.contains("value") && p["value"].is_number_integer()) row.value = p["value"].get<int>();
    row.predictions = Json::array();
    bool any = false;
    bool bad = false;
    for (const auto& f : exact_formulas(key.n, key.s, key.t, key.q)) {
      Json j = to_json(f);
      if (row.value) {
        const bool ok = *row.value == f.value;
        j["agrees"] = ok;
        if (!f.asymptotic) {
          any = true;
          bad = bad || !ok;
        }
      } else {
        j["agrees"] = nullptr;
        any = any || !f.asymptotic;
      }
      row.predictions.push_back(std::move(j));
    }
    if (row.status != "Exact") row.agreement = "inconclusive";
    else if (!any) row.agreement = "no-formula";
    else row.agreement = bad ? "mismatch" : "agree";
    (row.agreement == "mismatch" ? mismatched : rest).push_back(std::move(row));
  }
  mismatched.insert(mismatched.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return mismatched;
}

auto to_json(const ReportRow& row) -> Json {
  Json j{{"key", to_json(row.key)}, {"status", row.status}, {"lo", row.lo}, {"hi", row.hi},
         {"predictions", row.predictions}, {"agreement", row.agreement}};
  j["value"] = row.value ? Json(*row.value) : Json(nullptr);
  return j;
}

}  // namespace rbl
