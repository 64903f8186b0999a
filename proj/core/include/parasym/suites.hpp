#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parasym/coset_enumeration.hpp"
#include "parasym/families.hpp"
#include "parasym/report.hpp"

namespace parasym {

/// `builtin:<name>`, `file:<path>` (multiplication table), or
/// `prod:<spec>x<spec>` where each side is a spec or a bare builtin name.
/// Throws kUnknownName / kParseError.
GroupPtr parse_group_spec(std::string_view spec);

/// Coset cap: PARASYM_MAX_COSETS if set and valid, otherwise `fallback`.
std::uint64_t cap_from_environment(std::uint64_t fallback);

/// Presentation by family name: coxeter, transposition, interpolating (uses t),
/// amalgam, hs, hn, reflection, exterior.
Presentation make_presentation(std::string_view family, std::uint32_t n, GroupPtr g, std::uint32_t t = 1);

enum class Suite { kTheorem1, kCrossedModule, kEquivalences, kRewriting, kHImplications, kSchur };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite s);

/// Runs a suite; records come back sorted by check id.
std::vector<VerificationRecord> run_suite(Suite suite, GroupPtr g, const std::string& group_label, std::uint32_t n,
                                          const EnumerationOptions& options);

/// 0 if every record passes, 4 if any fails, otherwise 3 (timeouts or
/// inconclusive results).
int suite_exit_code(const std::vector<VerificationRecord>& records);

/// |H_2(G)| * |G|^n * n! / |G^ab| with |H_2(G)| from the exterior-square
/// oracle; nullopt if G ^ G does not enumerate.
std::optional<std::uint64_t> predicted_order(std::uint32_t n, GroupPtr g, const EnumerationOptions& options = {});

}  // namespace parasym
