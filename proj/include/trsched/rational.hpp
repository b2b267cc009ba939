#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace trsched {

/// Exact rational number backed by GMP. Always kept in canonical form
/// (gcd(num, den) = 1, den > 0), so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q", "p" or "-p"; throws std::invalid_argument on anything
    /// else, including q = 0.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const { return q_.get_str(); }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    /// Smallest integer >= this.
    [[nodiscard]] mpz_class ceil() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] std::size_t hash() const;

private:
    mpq_class q_;
};

/// Time quantities (execution times, completions, idle gaps, window length).
/// Nonnegativity is enforced where values enter the library, not per operation.
using TimeValue = Rational;

[[nodiscard]] Rational pow(const Rational& base, unsigned exponent);

[[nodiscard]] inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
[[nodiscard]] inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// Decimal rendering with `digits` significant digits. Presentation only.
[[nodiscard]] std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace trsched

template <>
struct std::hash<trsched::Rational> {
    std::size_t operator()(const trsched::Rational& r) const noexcept { return r.hash(); }
};
