#pragma once

// Verification reports and their JSON form.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace permfrob {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Inconclusive is reserved for positive-certificate checks whose
/// certificate was not found; it never means the claim is false.
enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);
/// Pass < Inconclusive < Fail.
Verdict combine(Verdict a, Verdict b);

struct ReportParams {
  std::optional<std::string> shape;
  std::optional<std::size_t> m, n, t;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> e;
  std::optional<std::string> method;
};

struct LemmaReport {
  std::string check;
  ReportParams params;
  Verdict verdict = Verdict::Fail;
  /// Machine-checked evidence: survivor, coefficient, counts, residue, ...
  Json evidence = Json::object();
  double ms = 0;

  /// {"schema", "check", "params", "verdict", "evidence", "ms"}; the timing
  /// field is omitted when include_timing is false.
  Json to_json(bool include_timing = true) const;
  /// One line: "<verdict> <check> <params>".
  std::string summary() const;
};

}  // namespace permfrob
