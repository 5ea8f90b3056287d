#include <random>

#include "cli/cli.hpp"
#include "phisq/factorize.hpp"
#include "phisq/oracle.hpp"
#include "phisq/representation.hpp"
#include "phisq/sampling.hpp"
#include "phisq/totient.hpp"

namespace phisq::cli {
namespace {

SelftestCheck example_check(const std::string& name, std::uint64_t m, std::uint64_t n,
                            const FactoredRational& r, std::uint64_t common) {
    const auto report = verify(factor(m), factor(n), r);
    SelftestCheck check{name, report.holds && report.common_value == Natural(common), ""};
    if (!check.passed) {
        check.detail = "computed " + to_string(report.lhs) + ", common value " +
                       (report.common_value ? report.common_value->str() : "none");
    }
    return check;
}

SelftestCheck identity_check(const SelftestOptions& options) {
    auto phi = totient_table(options.identity_limit);
    if (options.corrupt_totient_table) options.corrupt_totient_table(phi);
    for (std::uint64_t k = 1; k <= options.identity_limit; ++k) {
        const Natural factored = expand(totient_of_square(factor(k)));
        const Natural direct = Natural(k) * phi[k];
        if (factored != direct) {
            return {"phi(n^2) = n*phi(n)", false,
                    "n = " + std::to_string(k) + ": " + factored.str() + " != " + direct.str()};
        }
    }
    return {"phi(n^2) = n*phi(n)", true, "n <= " + std::to_string(options.identity_limit)};
}

SelftestCheck injectivity_check(const SelftestOptions& options) {
    SelftestCheck check{"phi(n^2) injective", true,
                        "n <= " + std::to_string(options.injectivity_limit)};
    if (auto hit = injectivity_scan(options.injectivity_limit)) {
        check.passed = false;
        check.detail = "phi(" + std::to_string(hit->first) + "^2) = phi(" +
                       std::to_string(hit->second) + "^2)";
    }
    return check;
}

SelftestCheck round_trip_check(const SelftestOptions& options) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.random_cases; ++i) {
        const FactoredRational r = random_rational(rng, 97, 6);
        const Representation rep = represent(r);
        if (!verify(rep.m, rep.n, r).holds)
            return {"represent round-trip", false, "fails for " + to_string(r)};
    }
    return {"represent round-trip", true, std::to_string(options.random_cases) + " random ratios"};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options) {
    std::vector<SelftestCheck> checks;
    auto attempt = [&](const std::string& name, auto body) {
        try {
            checks.push_back(body());
        } catch (const std::exception& e) {
            checks.push_back({name, false, e.what()});
        }
    };
    attempt("example 19/47", [] {
        return example_check("example 19/47", 39330, 55836,
                             FactoredRational(FactorMap{{19, 1}, {47, -1}}), 19673280);
    });
    attempt("example 47/58", [] {
        return example_check("example 47/58", 14476, 20010,
                             FactoredRational(FactorMap{{2, -1}, {29, -1}, {47, 1}}), 1700160);
    });
    attempt("phi(n^2) = n*phi(n)", [&] { return identity_check(options); });
    attempt("phi(n^2) injective", [&] { return injectivity_check(options); });
    attempt("represent round-trip", [&] { return round_trip_check(options); });
    return checks;
}

}  // namespace phisq::cli
