#include "cli/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "phisq/errors.hpp"
#include "phisq/factorize.hpp"
#include "phisq/oracle.hpp"
#include "phisq/parse.hpp"
#include "phisq/representation.hpp"

namespace phisq::cli {
namespace {

using Json = nlohmann::ordered_json;

Json factors_json(const FactoredInteger& f) {
    Json arr = Json::array();
    for (const auto& [p, e] : f.factors()) arr.push_back({{"prime", p.str()}, {"exponent", e}});
    return arr;
}

Json factors_json(const FactoredRational& r) {
    Json arr = Json::array();
    for (const auto& [p, e] : r.factors()) arr.push_back({{"prime", p.str()}, {"exponent", e}});
    return arr;
}

Json integer_json(const FactoredInteger& f, bool expanded) {
    Json out = {{"factors", factors_json(f)}};
    if (expanded) out["value"] = expand(f).str();
    return out;
}

Json header(const char* command, const std::string& input) {
    return {{"command", command}, {"input", input}, {"status", to_string(Status::ok)}};
}

Outcome failure(Json record, Status status, const std::string& message) {
    record["status"] = to_string(status);
    record["error"] = message;
    return {std::move(record), exit_code(status)};
}

// Runs `body`, mapping library errors onto statuses.
template <class Body>
Outcome guarded(Json record, Body body) {
    try {
        return body(record);
    } catch (const ParseError& e) {
        return failure(std::move(record), Status::parse_error, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(std::move(record), Status::parse_error, e.what());
    } catch (const UnsupportedScale& e) {
        return failure(std::move(record), Status::unsupported_scale, e.what());
    }
}

bool within_prime_bound(const Representation& rep) {
    const auto top = rep.ratio.largest_prime();
    if (!top) return rep.m.is_one() && rep.n.is_one();
    for (const auto* side : {&rep.m, &rep.n}) {
        if (auto p = side->largest_prime(); p && *p > *top) return false;
    }
    return true;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

std::string factors_text(const Json& factors) {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += " * ";
        out += f["prime"].get<std::string>() + "^" + std::to_string(f["exponent"].get<Exponent>());
    }
    return out;
}

void flatten(const Json& node, const std::string& prefix, std::ostream& out) {
    for (const auto& [key, value] : node.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (key == "factors") {
            out << name << ": " << factors_text(value) << '\n';
        } else if (value.is_object()) {
            flatten(value, name, out);
        } else if (value.is_array()) {
            std::size_t i = 0;
            for (const auto& item : value) {
                if (item.is_object())
                    flatten(item, name + "[" + std::to_string(i++) + "]", out);
                else
                    out << name << "[" << i++ << "]: " << scalar_text(item) << '\n';
            }
        } else {
            out << name << ": " << scalar_text(value) << '\n';
        }
    }
}

}  // namespace

int exit_code(Status status) {
    switch (status) {
        case Status::ok: return 0;
        case Status::parse_error: return 1;
        case Status::unsupported_scale: return 2;
        case Status::internal_invariant_violation: return 3;
    }
    return 3;
}

std::string to_string(Status status) {
    switch (status) {
        case Status::ok: return "ok";
        case Status::parse_error: return "parse_error";
        case Status::unsupported_scale: return "unsupported_scale";
        case Status::internal_invariant_violation: return "internal_invariant_violation";
    }
    return "internal_invariant_violation";
}

Outcome cmd_represent(const std::string& ratio_text, const Flags& flags) {
    return guarded(header("represent", ratio_text), [&](Json& record) -> Outcome {
        const FactoredRational r = parse_rational(ratio_text);
        record["ratio"] = to_string(r);
        const Representation rep = represent(r);
        const VerificationReport report = verify(rep.m, rep.n, r);
        record["m"] = integer_json(rep.m, flags.expanded);
        record["n"] = integer_json(rep.n, flags.expanded);
        record["depth"] = rep.depth;
        record["verified"] = report.holds;
        if (!report.holds)
            return failure(std::move(record), Status::internal_invariant_violation,
                           "phi(m^2)/phi(n^2) = " + to_string(report.lhs) + " differs from the input");
        if (!within_prime_bound(rep))
            return failure(std::move(record), Status::internal_invariant_violation,
                           "m*n has a prime above the largest prime of the input");
        return {std::move(record), 0};
    });
}

Outcome cmd_verify(const std::string& m_text, const std::string& n_text,
                   const std::string& ratio_text, const Flags& flags) {
    Json record = header("verify", m_text + " " + n_text + " " + ratio_text);
    return guarded(std::move(record), [&](Json& rec) -> Outcome {
        const FactoredInteger m = parse_integer(m_text);
        const FactoredInteger n = parse_integer(n_text);
        const FactoredRational r = parse_rational(ratio_text);
        const VerificationReport report = verify(m, n, r);
        rec["m"] = integer_json(m, flags.expanded);
        rec["n"] = integer_json(n, flags.expanded);
        rec["ratio"] = to_string(r);
        rec["computed"] = to_string(report.lhs);
        rec["holds"] = report.holds;
        rec["common_value"] =
            report.common_value ? Json(report.common_value->str()) : Json(nullptr);
        return {std::move(rec), report.holds ? 0 : exit_not_verified};
    });
}

Outcome cmd_factor(const std::string& n_text, const Flags&) {
    return guarded(header("factor", n_text), [&](Json& record) -> Outcome {
        const Natural n = parse_natural(n_text);
        const FactoredInteger f = factor(n);
        record["value"] = n.str();
        record["factors"] = factors_json(f);
        return {std::move(record), 0};
    });
}

Outcome cmd_sequence(std::uint64_t limit, const Flags&) {
    return guarded(header("sequence", std::to_string(limit)), [&](Json& record) -> Outcome {
        record["values"] = phi_square_sequence(limit);
        return {std::move(record), 0};
    });
}

Outcome cmd_search(const std::string& ratio_text, std::uint64_t bound, unsigned workers,
                   const Flags&) {
    return guarded(header("search", ratio_text), [&](Json& record) -> Outcome {
        const FactoredRational r = parse_rational(ratio_text);
        const SearchResult found = brute_force_minimal(r, bound, workers);
        record["ratio"] = to_string(r);
        record["bound"] = found.bound;
        record["found"] = found.found;
        record["m"] = found.m ? Json(*found.m) : Json(nullptr);
        record["n"] = found.n ? Json(*found.n) : Json(nullptr);
        if (found.found) {
            const auto report = verify(factor(*found.m), factor(*found.n), r);
            record["verified"] = report.holds;
            if (!report.holds)
                return failure(std::move(record), Status::internal_invariant_violation,
                               "search hit does not verify");
        }
        return {std::move(record), 0};
    });
}

Outcome cmd_selftest(const SelftestOptions& options, const Flags&) {
    Json record = header("selftest", "");
    Json checks = Json::array();
    bool all = true;
    for (const auto& check : run_selftest(options)) {
        all = all && check.passed;
        checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    record["checks"] = std::move(checks);
    if (!all) {
        record["status"] = to_string(Status::internal_invariant_violation);
        return {std::move(record), exit_code(Status::internal_invariant_violation)};
    }
    return {std::move(record), 0};
}

std::string render_plain(const Json& record) {
    std::ostringstream out;
    const std::string command = record.value("command", "");
    if (command == "sequence" && record.contains("values")) {
        for (const auto& v : record["values"]) out << v.get<std::uint64_t>() << '\n';
        return out.str();
    }
    if (command == "selftest" && record.contains("checks")) {
        for (const auto& c : record["checks"]) {
            out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>();
            if (const auto detail = c["detail"].get<std::string>(); !detail.empty())
                out << "  (" << detail << ")";
            out << '\n';
        }
        out << "status: " << record["status"].get<std::string>() << '\n';
        return out.str();
    }
    flatten(record, "", out);
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SelftestOptions& selftest) {
    CLI::App app{"Represent positive rationals as phi(m^2)/phi(n^2)", "phisq"};
    app.require_subcommand(1);
    Flags flags;
    app.add_flag("--json", flags.json, "Emit a JSON record");
    app.add_flag("--expanded", flags.expanded, "Include decimal values of m and n");

    std::string ratio, m_text, n_text, nat;
    std::uint64_t limit = 0;
    std::uint64_t bound = 1000;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());

    auto* represent_cmd = app.add_subcommand("represent", "Construct (m, n) for a ratio");
    represent_cmd->add_option("ratio", ratio, "p/q, p, or p1^e1 * p2^e2 ...")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check phi(m^2)/phi(n^2) against a ratio");
    verify_cmd->add_option("m", m_text)->required();
    verify_cmd->add_option("n", n_text)->required();
    verify_cmd->add_option("ratio", ratio)->required();

    auto* factor_cmd = app.add_subcommand("factor", "Prime factorization of a natural");
    factor_cmd->add_option("nat", nat)->required();

    auto* sequence_cmd = app.add_subcommand("sequence", "phi(k^2) for k = 1..limit");
    sequence_cmd->add_option("limit", limit)->required();

    auto* search_cmd = app.add_subcommand("search", "Minimal (m, n) by exhaustive search");
    search_cmd->add_option("ratio", ratio)->required();
    search_cmd->add_option("--bound", bound, "Largest m and n searched")->capture_default_str();
    search_cmd->add_option("--workers", workers, "Scan threads")->check(CLI::PositiveNumber);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in consistency checks");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv{"phisq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "phisq: " << e.what() << '\n';
        return exit_code(Status::parse_error);
    }

    Outcome outcome;
    if (*represent_cmd) outcome = cmd_represent(ratio, flags);
    else if (*verify_cmd) outcome = cmd_verify(m_text, n_text, ratio, flags);
    else if (*factor_cmd) outcome = cmd_factor(nat, flags);
    else if (*sequence_cmd) outcome = cmd_sequence(limit, flags);
    else if (*search_cmd) outcome = cmd_search(ratio, bound, workers, flags);
    else if (*selftest_cmd) outcome = cmd_selftest(selftest, flags);

    if (flags.json) {
        out << outcome.record.dump(2) << '\n';
    } else if (outcome.record.contains("error")) {
        err << render_plain(outcome.record);
    } else {
        out << render_plain(outcome.record);
    }
    return outcome.exit;
}

}  // namespace phisq::cli
