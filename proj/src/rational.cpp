#include "ruledcent/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "ruledcent/error.hpp"

namespace ruledcent {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::Overflow, "rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 x, i128 y)
{
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        i128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

Rational make(i128 num, i128 den)
{
    if (den == 0)
        throw Error(ErrorCode::ParseError, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw Error(ErrorCode::ParseError, "zero denominator");
    if (den < 0) {
        num = narrow(-static_cast<i128>(num));
        den = narrow(-static_cast<i128>(den));
    }
    std::int64_t g = std::gcd(num, den);
    num_ = g > 1 ? num / g : num;
    den_ = g > 1 ? den / g : den;
}

std::int64_t Rational::floor() const
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
        --q;
    return q;
}

std::int64_t Rational::ceil() const
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0)
        ++q;
    return q;
}

Rational Rational::operator-() const { return make(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& x, const Rational& y)
{
    return make(static_cast<i128>(x.num_) * y.den_ + static_cast<i128>(y.num_) * x.den_,
                static_cast<i128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y)
{
    return make(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y)
{
    if (y.num_ == 0)
        throw Error(ErrorCode::ParseError, "division by zero");
    return make(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y)
{
    i128 l = static_cast<i128>(x.num_) * y.den_;
    i128 r = static_cast<i128>(y.num_) * x.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_pretty() const
{
    return den_ == 1 ? std::to_string(num_) : to_string();
}

Rational Rational::parse(std::string_view text)
{
    if (text.find_first_of(".eE") != std::string_view::npos)
        throw Error(ErrorCode::ParseError,
                    "decimal input '" + std::string(text) + "' is not accepted; write it as p/q, e.g. 7/2");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, text));
    std::int64_t p = parse_int(text.substr(0, slash), text);
    std::int64_t q = parse_int(text.substr(slash + 1), text);
    if (q == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string to_decimal(const Rational& x, int digits)
{
    i128 scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    i128 num = static_cast<i128>(x.num()) * scale;
    bool neg = num < 0;
    if (neg)
        num = -num;
    i128 q = num / x.den();
    if ((num % x.den()) * 2 >= x.den())
        ++q;
    i128 ip = q / scale;
    i128 fp = q % scale;
    std::string out = std::to_string(narrow(ip));
    if (fp != 0) {
        std::string frac = std::to_string(narrow(fp));
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        out += "." + frac;
    }
    if (neg && (ip != 0 || fp != 0))
        out.insert(0, "-");
    return out;
}

} // namespace ruledcent
