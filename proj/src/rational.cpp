#include "rsg/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace rsg {

Rational parse_rational(const std::string &text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::size_t p1 = 0, p2 = 0;
        long long num = std::stoll(text.substr(0, slash), &p1);
        long long den = std::stoll(text.substr(slash + 1), &p2);
        if (p1 != slash || slash + 1 + p2 != text.size())
            throw std::invalid_argument("malformed rational literal: " + text);
        if (den == 0)
            throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        std::size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument("malformed integer literal: " + text);
        return Rational(v);
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || frac_len > 15)
        throw std::invalid_argument("malformed decimal literal: " + text);
    std::size_t pos = 0;
    long long num = std::stoll(digits, &pos);
    if (pos != digits.size())
        throw std::invalid_argument("malformed decimal literal: " + text);
    long long den = 1;
    for (std::size_t k = 0; k < frac_len; ++k)
        den *= 10;
    return Rational(num, den);
}

Rational rational_from_decimal(double value, int max_digits) {
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite number in input");
    long long den = 1;
    for (int k = 0; k < max_digits; ++k)
        den *= 10;
    double scaled = value * static_cast<double>(den);
    long long num = std::llround(scaled);
    if (std::fabs(scaled - static_cast<double>(num)) > 1e-3)
        throw std::invalid_argument("number is not a short decimal");
    return Rational(num, den);
}

} // namespace rsg
