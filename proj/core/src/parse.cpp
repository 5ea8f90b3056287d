#include "phisq/parse.hpp"

#include "phisq/errors.hpp"
#include "phisq/factorize.hpp"
#include "phisq/primality.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

namespace phisq {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

Exponent parse_exponent(std::string_view text) {
    const std::string_view original = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("malformed exponent '" + std::string(original) + "'");
    const Natural magnitude = parse_natural(text);
    if (magnitude > std::numeric_limits<Exponent>::max())
        throw ExponentOverflow("exponent '" + std::string(original) + "' out of range");
    const auto value = magnitude.convert_to<Exponent>();
    return negative ? -value : value;
}

FactoredRational parse_literal(std::string_view text) {
    FactorMap factors;
    for (std::string_view raw : split(text, '*')) {
        const std::string_view term = trim(raw);
        const auto caret = term.find('^');
        if (caret == std::string_view::npos)
            throw ParseError("factored term '" + std::string(term) + "' lacks '^'");
        const Natural p = parse_natural(trim(term.substr(0, caret)));
        const Exponent e = parse_exponent(trim(term.substr(caret + 1)));
        if (e == 0) throw ParseError("zero exponent in term '" + std::string(term) + "'");
        if (p < 2 || !is_prime(p)) throw ParseError("base " + p.str() + " is not prime");
        if (!factors.emplace(p, e).second) throw ParseError("prime " + p.str() + " repeated");
    }
    return FactoredRational(detail::trusted, std::move(factors));
}

FactoredInteger parse_positive(std::string_view text) {
    const Natural value = parse_natural(text);
    if (value == 0) throw ZeroValue("value must be positive");
    return factor(value);
}

}  // namespace

Natural parse_natural(std::string_view digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("expected a natural number, got '" + std::string(digits) + "'");
    return Natural(std::string(digits));
}

FactoredRational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty input");
    if (text.find('^') != std::string_view::npos) return parse_literal(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return as_rational(parse_positive(text));
    const auto num = trim(text.substr(0, slash));
    const auto den = trim(text.substr(slash + 1));
    if (den.find('/') != std::string_view::npos) throw ParseError("more than one '/'");
    return divide(parse_positive(num), parse_positive(den));
}

FactoredInteger parse_integer(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty input");
    if (text.find('^') == std::string_view::npos) return parse_positive(text);
    const FactoredRational r = parse_literal(text);
    if (!r.denominator().is_one()) throw ParseError("integer literal has a negative exponent");
    return r.numerator();
}

}  // namespace phisq
