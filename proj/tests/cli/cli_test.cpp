#include "doctest.h"

#include <sstream>

#include "cli/cli.hpp"
#include "phisq/factorize.hpp"
#include "phisq/parse.hpp"
#include "phisq/representation.hpp"

using namespace phisq;
using namespace phisq::cli;
using Json = nlohmann::json;

namespace {

struct Run {
    int exit;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args, const SelftestOptions& selftest = {}) {
    std::ostringstream out, err;
    const int code = run(args, out, err, selftest);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    args.push_back("--json");
    return Json::parse(invoke(std::move(args)).out);
}

std::string factors_of(const Json& side) {
    std::string text;
    for (const auto& f : side["factors"]) {
        if (!text.empty()) text += " * ";
        text += f["prime"].get<std::string>() + "^" + std::to_string(f["exponent"].get<long long>());
    }
    return text.empty() ? "1" : text;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(exit_code(Status::ok) == 0);
    CHECK(exit_code(Status::parse_error) == 1);
    CHECK(exit_code(Status::unsupported_scale) == 2);
    CHECK(exit_code(Status::internal_invariant_violation) == 3);
}

TEST_CASE("represent 19/47") {
    const auto j = invoke_json({"represent", "19/47", "--expanded"});
    CHECK(j["status"] == "ok");
    CHECK(j["verified"] == true);
    CHECK(j["input"] == "19/47");
    const auto m = parse_integer(factors_of(j["m"]));
    const auto n = parse_integer(factors_of(j["n"]));
    CHECK(expand(m).str() == j["m"]["value"].get<std::string>());
    CHECK(verify(m, n, parse_rational("19/47")).holds);
    for (const auto* side : {&m, &n})
        for (const auto& [p, e] : side->factors()) CHECK(p <= 47);
}

TEST_CASE("represent 1 and 3") {
    auto one = invoke_json({"represent", "1", "--expanded"});
    CHECK(one["m"]["value"] == "1");
    CHECK(one["n"]["value"] == "1");
    CHECK(one["verified"] == true);
    auto three = invoke_json({"represent", "3", "--expanded"});
    CHECK(three["m"]["value"] == "3");
    CHECK(three["n"]["value"] == "2");
    CHECK(three["depth"] == 2);
}

TEST_CASE("represent without --expanded omits values") {
    auto j = invoke_json({"represent", "3"});
    CHECK_FALSE(j["m"].contains("value"));
    CHECK(j["m"]["factors"].size() == 1);
}

TEST_CASE("represent error statuses") {
    auto bad = invoke({"represent", "x/y"});
    CHECK(bad.exit == 1);
    auto zero = invoke({"--json", "represent", "0"});
    CHECK(zero.exit == 1);
    CHECK(Json::parse(zero.out)["status"] == "parse_error");
    auto scale = invoke({"--json", "represent", "618970019642690137449562111^1"});
    CHECK(scale.exit == 2);
    CHECK(Json::parse(scale.out)["status"] == "unsupported_scale");
    auto overflow = invoke({"represent", "2^9223372036854775807"});
    CHECK(overflow.exit == 2);
}

TEST_CASE("verify commands") {
    auto first = invoke({"verify", "39330", "55836", "19/47", "--json"});
    CHECK(first.exit == 0);
    auto j = Json::parse(first.out);
    CHECK(j["holds"] == true);
    CHECK(j["common_value"] == "19673280");

    auto second = invoke({"verify", "14476", "20010", "47/58", "--json"});
    CHECK(second.exit == 0);
    CHECK(Json::parse(second.out)["common_value"] == "1700160");

    auto wrong = invoke({"verify", "2", "1", "3", "--json"});
    CHECK(wrong.exit == exit_not_verified);
    auto w = Json::parse(wrong.out);
    CHECK(w["holds"] == false);
    CHECK(w["computed"] == "2^1");
    CHECK(w["status"] == "ok");

    auto literal = invoke({"verify", "2^2 * 7^1 * 11^1 * 47^1", "20010", "47/58"});
    CHECK(literal.exit == 0);

    CHECK(invoke({"verify", "2^-1", "1", "1"}).exit == 1);
}

TEST_CASE("factor command") {
    auto j = invoke_json({"factor", "39330"});
    CHECK(factors_of(j) == "2^1 * 3^2 * 5^1 * 19^1 * 23^1");
    CHECK(invoke({"factor", "0"}).exit == 1);
    CHECK(invoke({"factor", "abc"}).exit == 1);
}

TEST_CASE("sequence command") {
    CHECK(invoke({"sequence", "5"}).out == "1\n2\n6\n8\n20\n");
    CHECK(invoke({"sequence", "1"}).out == "1\n");
    auto j = invoke_json({"sequence", "10"});
    CHECK(j["values"].back() == 40);
    CHECK(invoke({"sequence", "0"}).exit == 1);
    CHECK(invoke({"sequence", "ten"}).exit == 1);
}

TEST_CASE("search command") {
    auto three = invoke_json({"search", "3", "--bound", "10"});
    CHECK(three["found"] == true);
    CHECK(three["m"] == 3);
    CHECK(three["n"] == 2);

    auto one = invoke_json({"search", "1", "--bound", "1"});
    CHECK(one["m"] == 1);
    CHECK(one["n"] == 1);

    auto far = invoke({"search", "19/47", "--bound", "100", "--json"});
    CHECK(far.exit == 0);
    auto f = Json::parse(far.out);
    if (f["found"] == true) {
        CHECK(f["verified"] == true);
    } else {
        CHECK(f["m"].is_null());
    }

    CHECK(invoke({"search", "3", "--bound", "0"}).exit == 1);
    CHECK(invoke({"search", "3/"}).exit == 1);
}

TEST_CASE("plain and JSON output carry the same fields") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"represent", "47/58", "--expanded"},
          std::vector<std::string>{"verify", "39330", "55836", "19/47"},
          std::vector<std::string>{"search", "3", "--bound", "10"},
          std::vector<std::string>{"factor", "55836"}}) {
        const auto plain = invoke(args).out;
        auto json_args = args;
        json_args.push_back("--json");
        const auto record = nlohmann::ordered_json::parse(invoke(json_args).out);
        CHECK(plain == render_plain(record));
        CHECK(plain.find("status: ok") != std::string::npos);
    }
}

TEST_CASE("represent JSON schema keys") {
    auto j = invoke_json({"represent", "6/4", "--expanded"});
    for (const char* key : {"command", "input", "status", "m", "n", "verified", "depth"})
        CHECK(j.contains(key));
    for (const char* side : {"m", "n"}) {
        CHECK(j[side].contains("factors"));
        CHECK(j[side].contains("value"));
    }
}

TEST_CASE("selftest passes") {
    const auto r = invoke({"selftest"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("status: ok") != std::string::npos);
}

TEST_CASE("selftest names the check broken by a corrupted totient table") {
    SelftestOptions options;
    options.corrupt_totient_table = [](std::vector<std::uint64_t>& phi) { phi[97] = 95; };
    const auto r = invoke({"selftest", "--json"}, options);
    CHECK(r.exit == 3);
    const auto j = Json::parse(r.out);
    CHECK(j["status"] == "internal_invariant_violation");
    bool named = false;
    for (const auto& c : j["checks"]) {
        if (c["name"] == "phi(n^2) = n*phi(n)") {
            named = true;
            CHECK(c["passed"] == false);
            CHECK(c["detail"].get<std::string>().find("n = 97") != std::string::npos);
        } else {
            CHECK(c["passed"] == true);
        }
    }
    CHECK(named);
}

TEST_CASE("argument errors") {
    CHECK(invoke({}).exit == 1);
    CHECK(invoke({"frobnicate"}).exit == 1);
    CHECK(invoke({"verify", "1", "1"}).exit == 1);
    CHECK(invoke({"--help"}).exit == 0);
}
