#include "permfrob/report.hpp"

#include <sstream>

namespace permfrob {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json LemmaReport::to_json(bool include_timing) const {
  Json j;
  j["schema"] = kReportSchema;
  j["check"] = check;
  j["params"] = {{"shape", optional_json(params.shape)}, {"m", optional_json(params.m)},
                 {"n", optional_json(params.n)},         {"t", optional_json(params.t)},
                 {"p", optional_json(params.p)},         {"e", optional_json(params.e)},
                 {"method", optional_json(params.method)}};
  j["verdict"] = std::string(to_string(verdict));
  j["evidence"] = evidence;
  if (include_timing) j["ms"] = ms;
  return j;
}

std::string LemmaReport::summary() const {
  std::ostringstream out;
  out << to_string(verdict) << ' ' << check;
  if (params.shape) out << " shape=" << *params.shape;
  if (params.m) out << " m=" << *params.m;
  if (params.n) out << " n=" << *params.n;
  if (params.t) out << " t=" << *params.t;
  if (params.p) out << " p=" << *params.p;
  if (params.e) out << " e=" << *params.e;
  if (params.method) out << " method=" << *params.method;
  return out.str();
}

}  // namespace permfrob
