#include "parasym/report.hpp"

namespace parasym {

namespace {

// Fields are tab-separated and records newline-separated, so neither may
// appear inside a value.
std::string clean(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kTimeout: return "timeout";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string VerificationRecord::to_line() const {
  std::string line = "check=" + clean(check_id) + "\tparams=";
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) line += ',';
    line += clean(params[k].first) + '=' + clean(params[k].second);
  }
  line += std::string("\tverdict=") + to_string(verdict);
  line += "\twitness=" + (witness && !witness->empty() ? clean(*witness) : std::string("-"));
  line += "\tms=" + std::to_string(elapsed_ms);
  return line;
}

VerificationRecord make_record(std::string check_id, std::vector<std::pair<std::string, std::string>> params,
                               const CheckResult& result, std::int64_t elapsed_ms) {
  VerificationRecord r{std::move(check_id), std::move(params), result.verdict, std::nullopt, elapsed_ms};
  if (!result.witness.empty())
    r.witness = result.witness;
  else if (result.verdict != Verdict::kPass)
    r.witness = "unspecified";
  return r;
}

}  // namespace parasym
