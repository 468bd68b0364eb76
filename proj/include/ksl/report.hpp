#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace ksl::report {

inline constexpr const char* kToolName = "ksl";
inline constexpr const char* kVersion = "0.1.0";

using Value = std::variant<bool, long long, double, std::string>;
using Entry = std::pair<std::string, Value>;
using Row = std::vector<Entry>;

/// 15 significant digits ("%.15g"); non-finite values as nan/inf/-inf.
std::string format_number(double v);
std::string format_value(const Value& v);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Results keyed by flat paths such as "constants.c_s" or
/// "algebra.section2.step5.status", kept in insertion order.
class Report {
 public:
  explicit Report(std::string subcommand);

  const std::string& subcommand() const { return subcommand_; }

  void config(const std::string& key, Value v);
  void set(const std::string& key, Value v);
  /// Writes key.status = pass|fail and counts the check.
  void check(const std::string& key, bool passed);
  /// Records a module error under key.error; counts as a failed check.
  void error(const std::string& key, const std::string& message);
  void add_row(Row row);

  bool passed() const { return failures_ == 0; }
  std::size_t check_count() const { return checks_; }
  std::size_t failure_count() const { return failures_; }
  const std::vector<Entry>& results() const { return results_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Value* find(const std::string& key) const;

  /// Everything except the header; byte-stable for a fixed configuration.
  std::string payload_json() const;
  std::string to_json(const std::string& timestamp) const;
  /// Comment header, then one row per tuple when rows exist, otherwise
  /// key,value lines.
  std::string to_csv(const std::string& timestamp) const;

 private:
  static void upsert(std::vector<Entry>& list, std::unordered_map<std::string, std::size_t>& index,
                     const std::string& key, Value v);

  std::string subcommand_;
  std::vector<Entry> config_;
  std::unordered_map<std::string, std::size_t> config_index_;
  std::vector<Entry> results_;
  std::unordered_map<std::string, std::size_t> results_index_;
  std::vector<Row> rows_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

}  // namespace ksl::report
