#include "twoway/weight.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace twoway {

std::string_view to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::Exact ? "exact" : "float";
}

ArithmeticMode parse_arithmetic_mode(std::string_view text) {
    if (text == "exact") return ArithmeticMode::Exact;
    if (text == "float") return ArithmeticMode::Float;
    throw std::invalid_argument("unknown arithmetic mode '" + std::string(text) + "'");
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_number(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        mpz_class d{std::string(den), 10};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(mpz_class(std::string(num), 10), d);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
    Rational r{mpz_class(digits, 10)};
    if (exponent > 0)
        r *= Rational(pow10(static_cast<unsigned long>(exponent)));
    else if (exponent < 0)
        r /= Rational(pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();

    mpz_class den = value.get_den();
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return value.get_num().get_str() + "/" + value.get_den().get_str();

    unsigned long places = std::max(twos, fives);
    mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    std::string out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return negative ? "-" + out : out;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Weight::Weight(const Rational& value) : value_(value) {
    std::get<Rational>(value_).canonicalize();
    if (value < 0) throw std::domain_error("negative weight " + format_rational(value));
}

Weight::Weight(double value) : value_(value) {
    if (!(value >= 0)) throw std::domain_error("negative or NaN weight " + format_double(value));
}

Weight Weight::zero(ArithmeticMode mode) {
    return mode == ArithmeticMode::Exact ? Weight(Rational(0)) : Weight(0.0);
}

const Rational& Weight::exact() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r;
    throw std::logic_error("exact value requested from a float-mode weight");
}

double Weight::to_double() const {
    if (auto* r = std::get_if<Rational>(&value_)) return r->get_d();
    return std::get<double>(value_);
}

Weight Weight::in_mode(ArithmeticMode mode) const {
    if (mode == this->mode()) return *this;
    if (mode == ArithmeticMode::Float) return Weight(to_double());
    throw std::logic_error("cannot recover an exact weight from a float");
}

std::string Weight::str() const {
    if (auto* r = std::get_if<Rational>(&value_)) return format_rational(*r);
    return format_double(std::get<double>(value_));
}

Weight& Weight::operator+=(const Weight& other) {
    if (is_exact() && other.is_exact())
        std::get<Rational>(value_) += other.exact();
    else
        value_ = to_double() + other.to_double();
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (is_exact() && other.is_exact()) {
        Rational r = exact() - other.exact();
        *this = Weight(r);
    } else {
        double d = to_double() - other.to_double();
        // Float subtraction of equal sums may land a hair below zero.
        if (d < 0 && d > -1e-12) d = 0;
        *this = Weight(d);
    }
    return *this;
}

Weight& Weight::operator*=(const Weight& other) {
    if (is_exact() && other.is_exact())
        std::get<Rational>(value_) *= other.exact();
    else
        value_ = to_double() * other.to_double();
    return *this;
}

bool operator==(const Weight& lhs, const Weight& rhs) {
    if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() == rhs.exact();
    return lhs.to_double() == rhs.to_double();
}

std::partial_ordering operator<=>(const Weight& lhs, const Weight& rhs) {
    if (lhs.is_exact() && rhs.is_exact()) {
        int c = cmp(lhs.exact(), rhs.exact());
        return c < 0 ? std::partial_ordering::less
             : c > 0 ? std::partial_ordering::greater
                     : std::partial_ordering::equivalent;
    }
    return lhs.to_double() <=> rhs.to_double();
}

bool approx_equal(const Weight& lhs, const Weight& rhs, double tolerance) {
    if (lhs.is_exact() && rhs.is_exact()) return lhs == rhs;
    return std::fabs(lhs.to_double() - rhs.to_double()) <= tolerance;
}

std::ostream& operator<<(std::ostream& os, const Weight& weight) { return os << weight.str(); }

} // namespace twoway
