#include "bigolin/rational.hpp"

#include <cassert>
#include <cctype>

namespace bigolin {

Rational::Rational(long num, long den) : v_(num, den) {
    assert(den != 0);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    assert(!o.is_zero());
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

// Consumes "[+-]digits[/digits]" starting at pos; also accepts a bare sign
// immediately followed by 'i' (implicit numerator 1). Returns nullopt and
// leaves pos untouched on failure.
std::optional<Rational> scan_rational(std::string_view s, size_t& pos) {
    size_t p = pos;
    bool neg = false;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        neg = s[p] == '-';
        ++p;
    }
    size_t num_begin = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == num_begin) {
        if (p < s.size() && s[p] == 'i') { // "+i" / "-i" / "i"
            pos = p;
            return Rational(neg ? -1 : 1);
        }
        return std::nullopt;
    }
    mpz_class num(std::string(s.substr(num_begin, p - num_begin)), 10);
    mpz_class den(1);
    if (p < s.size() && s[p] == '/') {
        ++p;
        size_t den_begin = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == den_begin) return std::nullopt;
        den = mpz_class(std::string(s.substr(den_begin, p - den_begin)), 10);
        if (den == 0) return std::nullopt;
    }
    if (neg) num = -num;
    pos = p;
    return Rational(mpq_class(num, den));
}

} // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    size_t pos = 0;
    auto r = scan_rational(s, pos);
    if (!r || pos != s.size()) return std::nullopt;
    return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    assert(!n.is_zero());
    return {re / n, -im / n};
}

std::optional<GaussianRational> GaussianRational::checked_div(const GaussianRational& a,
                                                              const GaussianRational& b) {
    if (b.is_zero()) return std::nullopt;
    return a * b.inverse();
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "i";
    return re.str() + (im.sign() > 0 ? "+" : "") + im.str() + "i";
}

std::optional<GaussianRational> GaussianRational::parse(std::string_view s) {
    size_t pos = 0;
    auto first = scan_rational(s, pos);
    if (!first) return std::nullopt;
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        if (pos != s.size()) return std::nullopt;
        return GaussianRational(Rational(0), *first);
    }
    if (pos == s.size()) return GaussianRational(*first);
    auto second = scan_rational(s, pos);
    if (!second || pos >= s.size() || s[pos] != 'i') return std::nullopt;
    ++pos;
    if (pos != s.size()) return std::nullopt;
    return GaussianRational(*first, *second);
}

} // namespace bigolin
