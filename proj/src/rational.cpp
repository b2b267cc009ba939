#include "trsched/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace trsched {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return {num, den};
}

mpz_class Rational::ceil() const {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rational::hash() const {
    // Low limbs are enough to spread canonical values.
    const auto limb = [](const mpz_class& z) -> std::size_t {
        return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    };
    std::size_t h = limb(q_.get_num()) * 0x9e3779b97f4a7c15ULL;
    h ^= limb(q_.get_den()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    return sgn(q_) < 0 ? ~h : h;
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return {num, den};
}

std::string to_decimal(const Rational& r, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, r.to_double());
    return buf;
}

}  // namespace trsched
