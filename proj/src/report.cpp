#include "ksl/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ksl::report {

namespace {

using Json = nlohmann::ordered_json;

Json to_json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return format_number(x);
          return std::strtod(format_number(x).c_str(), nullptr);
        } else {
          return x;
        }
      },
      v);
}

Json entries_json(const std::vector<Entry>& entries) {
  Json out = Json::object();
  for (const auto& [k, v] : entries) out[k] = to_json_value(v);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return format_number(x);
        else return x;
      },
      v);
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Report::Report(std::string subcommand) : subcommand_(std::move(subcommand)) {}

void Report::upsert(std::vector<Entry>& list, std::unordered_map<std::string, std::size_t>& index,
                    const std::string& key, Value v) {
  auto it = index.find(key);
  if (it == index.end()) {
    index.emplace(key, list.size());
    list.emplace_back(key, std::move(v));
  } else {
    list[it->second].second = std::move(v);
  }
}

void Report::config(const std::string& key, Value v) {
  upsert(config_, config_index_, key, std::move(v));
}

void Report::set(const std::string& key, Value v) {
  upsert(results_, results_index_, key, std::move(v));
}

void Report::check(const std::string& key, bool passed) {
  set(key + ".status", std::string(passed ? "pass" : "fail"));
  ++checks_;
  if (!passed) ++failures_;
}

void Report::error(const std::string& key, const std::string& message) {
  set(key + ".error", message);
  ++checks_;
  ++failures_;
}

void Report::add_row(Row row) { rows_.push_back(std::move(row)); }

const Value* Report::find(const std::string& key) const {
  auto it = results_index_.find(key);
  return it == results_index_.end() ? nullptr : &results_[it->second].second;
}

std::string Report::payload_json() const {
  Json j;
  j["subcommand"] = subcommand_;
  j["config"] = entries_json(config_);
  j["results"] = entries_json(results_);
  if (!rows_.empty()) {
    Json rows = Json::array();
    for (const auto& r : rows_) rows.push_back(entries_json(r));
    j["rows"] = rows;
  }
  j["checks"] = {{"total", checks_}, {"failed", failures_}};
  j["status"] = passed() ? "pass" : "fail";
  return j.dump(2);
}

std::string Report::to_json(const std::string& timestamp) const {
  Json j;
  j["header"] = {{"tool", kToolName}, {"version", kVersion}, {"timestamp", timestamp}};
  Json payload = Json::parse(payload_json());
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

std::string Report::to_csv(const std::string& timestamp) const {
  std::ostringstream os;
  os << "# " << kToolName << " " << kVersion << " " << subcommand_ << " " << timestamp << "\n";
  if (!rows_.empty()) {
    std::vector<std::string> columns;
    std::set<std::string> seen;
    for (const auto& r : rows_)
      for (const auto& [k, v] : r)
        if (seen.insert(k).second) columns.push_back(k);
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_field(columns[i]);
    os << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ",";
        for (const auto& [k, v] : r)
          if (k == columns[i]) os << csv_field(format_value(v));
      }
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [k, v] : results_) os << csv_field(k) << "," << csv_field(format_value(v)) << "\n";
  os << "status," << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace ksl::report
