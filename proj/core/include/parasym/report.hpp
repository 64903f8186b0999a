#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parasym {

enum class Verdict { kPass, kFail, kTimeout, kInconclusive };

const char* to_string(Verdict v);

/// Outcome of a single check; failures carry a witness.
struct CheckResult {
  Verdict verdict = Verdict::kPass;
  std::string witness;

  static CheckResult pass(std::string note = {}) { return {Verdict::kPass, std::move(note)}; }
  static CheckResult fail(std::string witness) { return {Verdict::kFail, std::move(witness)}; }
  static CheckResult timeout(std::string what) { return {Verdict::kTimeout, std::move(what)}; }
  bool passed() const { return verdict == Verdict::kPass; }
};

struct VerificationRecord {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::kPass;
  std::optional<std::string> witness;
  std::int64_t elapsed_ms = 0;

  /// check=<id>\tparams=<k=v,...>\tverdict=<v>\twitness=<w or ->\tms=<int>
  std::string to_line() const;
};

/// Builds a record; a failing verdict without a witness is a programming
/// error and gets a placeholder witness naming the check.
VerificationRecord make_record(std::string check_id, std::vector<std::pair<std::string, std::string>> params,
                               const CheckResult& result, std::int64_t elapsed_ms);

}  // namespace parasym
