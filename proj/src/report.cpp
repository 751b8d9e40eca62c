#include "oapt/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace oapt {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& r : other.records_) records_.push_back(std::move(r));
}

void VerificationReport::sort() {
  std::stable_sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.suite, a.n, a.k) < std::tie(b.suite, b.n, b.k);
  });
}

std::size_t VerificationReport::failures() const { return count(Status::Fail); }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const auto& r) { return r.status == s; }));
}

std::string render_json(const VerificationReport& r, bool timing) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& rec : r.records()) {
    nlohmann::ordered_json j;
    j["suite"] = rec.suite;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["status"] = to_string(rec.status);
    j["anchor"] = rec.anchor;
    if (rec.witness) j["witness"] = *rec.witness;
    if (!rec.details.empty()) j["details"] = rec.details;
    if (timing) j["millis"] = rec.millis;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string render_csv(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << "suite,n,k,status,anchor,witness,details";
  if (timing) os << ",millis";
  os << "\n";
  for (const auto& rec : r.records()) {
    os << csv_field(rec.suite) << ',' << rec.n << ',' << rec.k << ',' << to_string(rec.status)
       << ',' << csv_field(rec.anchor) << ',' << csv_field(rec.witness.value_or("")) << ','
       << csv_field(rec.details.empty() ? "" : rec.details.dump());
    if (timing) os << ',' << rec.millis;
    os << "\n";
  }
  return os.str();
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::millis() const {
  const long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now().time_since_epoch())
                            .count();
  return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace oapt
