#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oapt {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

/// One row of a verification report. A FAIL always carries a witness that
/// can be re-checked on its own.
struct CheckRecord {
  std::string suite;
  int n = 0;
  int k = 0;
  Status status = Status::Pass;
  std::string anchor;
  std::optional<std::string> witness;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double millis = 0;
};

class VerificationReport {
 public:
  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void merge(VerificationReport other);
  /// Stable sort by (suite, n, k); ties keep insertion order.
  void sort();

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t failures() const;
  std::size_t count(Status s) const;
  bool passed() const { return failures() == 0; }

  nlohmann::ordered_json config = nlohmann::ordered_json::object();

 private:
  std::vector<CheckRecord> records_;
};

/// Flat array of records. Without timing the millis field is omitted.
std::string render_json(const VerificationReport& r, bool timing = true);
std::string render_csv(const VerificationReport& r, bool timing = true);

/// Wall-clock helper for filling CheckRecord::millis.
class Stopwatch {
 public:
  Stopwatch();
  double millis() const;

 private:
  long long start_ns_;
};

}  // namespace oapt
