#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ruledcent {

/* Exact rational p/q, q > 0, gcd(p,q) = 1.  All arithmetic is checked;
   an intermediate outside int64 throws Error(Overflow). */
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);

    friend bool operator==(const Rational& x, const Rational& y) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

    // "p/q" always, e.g. "3/1"
    std::string to_string() const;
    // "3" or "7/2"
    std::string to_pretty() const;

    // Accepts "7", "-7", "7/2".  Decimals are rejected with a hint.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Fixed-point rendering with at most `digits` decimals, rounded half away from zero.
std::string to_decimal(const Rational& x, int digits);

} // namespace ruledcent
