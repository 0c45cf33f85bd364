#include "lwd/rational.hpp"

#include "lwd/error.hpp"

#include <cctype>

namespace lwd {

namespace {

BigInt parse_int(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw Error(Errc::invalid_argument, "malformed integer '" + std::string(s) + "'");
    BigInt out = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(Errc::invalid_argument, "malformed integer '" + std::string(s) + "'");
        out = out * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-out) : out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
    v_ /= o.v_;
    return *this;
}

BigInt Rational::floor() const {
    BigInt n = num(), d = den();
    BigInt q = n / d;
    if (n.sign() < 0 && q * d != n) q -= 1;
    return q;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash != std::string_view::npos)
        return Rational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        std::string_view tail = s.substr(dot + 1);
        digits += tail;
        if (digits.empty() || digits == "-" || digits == "+")
            throw Error(Errc::invalid_argument, "malformed decimal '" + std::string(s) + "'");
        BigInt den = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
        return Rational(parse_int(digits), den);
    }
    return Rational(parse_int(s));
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r.sign() < 0) r += m;
    return r;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace lwd
