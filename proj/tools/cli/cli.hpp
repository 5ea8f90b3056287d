#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace phisq::cli {

enum class Status { ok, parse_error, unsupported_scale, internal_invariant_violation };

/// 0 ok, 1 parse error, 2 unsupported scale, 3 internal invariant violation.
int exit_code(Status status);
std::string to_string(Status status);

/// Exit code for a well-formed `verify` whose identity does not hold.
inline constexpr int exit_not_verified = 4;

struct SelftestOptions {
    std::uint64_t identity_limit = 10'000;
    std::uint64_t injectivity_limit = 10'000;
    std::size_t random_cases = 200;
    std::uint64_t seed = 20190630;
    /// Applied to the sieve totient table before the identity check; tests
    /// use it to corrupt the table and observe the failure.
    std::function<void(std::vector<std::uint64_t>&)> corrupt_totient_table;
};

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {});

/// One command's result: the structured record plus the process exit code.
struct Outcome {
    nlohmann::ordered_json record;
    int exit = 0;
};

struct Flags {
    bool json = false;
    bool expanded = false;
};

Outcome cmd_represent(const std::string& ratio_text, const Flags& flags);
Outcome cmd_verify(const std::string& m_text, const std::string& n_text,
                   const std::string& ratio_text, const Flags& flags);
Outcome cmd_factor(const std::string& n_text, const Flags& flags);
Outcome cmd_sequence(std::uint64_t limit, const Flags& flags);
Outcome cmd_search(const std::string& ratio_text, std::uint64_t bound, unsigned workers,
                   const Flags& flags);
Outcome cmd_selftest(const SelftestOptions& options, const Flags& flags);

/// Plain-text rendering of a record; carries the same fields as the JSON.
std::string render_plain(const nlohmann::ordered_json& record);

/// Parses argv (without the program name), dispatches, prints, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SelftestOptions& selftest = {});

}  // namespace phisq::cli
