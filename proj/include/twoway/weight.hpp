#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace twoway {

using Rational = mpq_class;

/// Arithmetic used for weights and costs. Exact mode is the default
/// everywhere; float mode trades exactness for speed on large instances.
enum class ArithmeticMode { Exact, Float };

std::string_view to_string(ArithmeticMode mode);
ArithmeticMode parse_arithmetic_mode(std::string_view text);

/// Parses "12", "-3.25", "1e-3", "0.5E2" or "7/2" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Exact decimal when the expansion terminates, otherwise "p/q".
std::string format_rational(const Rational& value);

/// Twelve significant digits.
std::string format_double(double value);

/// A non-negative weight or cost, carried either exactly or as a double.
///
/// Mixed-mode arithmetic degrades to float. Construction and subtraction
/// reject negative results.
class Weight {
public:
    Weight() : value_(Rational(0)) {}
    explicit Weight(const Rational& value);
    explicit Weight(double value);

    static Weight zero(ArithmeticMode mode);
    static Weight parse(std::string_view text) { return Weight(parse_rational(text)); }

    ArithmeticMode mode() const {
        return std::holds_alternative<Rational>(value_) ? ArithmeticMode::Exact : ArithmeticMode::Float;
    }
    bool is_exact() const { return mode() == ArithmeticMode::Exact; }

    /// Throws std::logic_error in float mode.
    const Rational& exact() const;
    double to_double() const;
    Weight in_mode(ArithmeticMode mode) const;

    std::string str() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Weight& other);

    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
    friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
    friend Weight operator*(Weight lhs, const Weight& rhs) { return lhs *= rhs; }

    friend bool operator==(const Weight& lhs, const Weight& rhs);
    friend std::partial_ordering operator<=>(const Weight& lhs, const Weight& rhs);

private:
    std::variant<Rational, double> value_;
};

bool approx_equal(const Weight& lhs, const Weight& rhs, double tolerance = 1e-9);

/// Converts an exact rational into the arithmetic type used by a solver.
template <typename Num>
Num convert(const Rational& value);

template <>
inline Rational convert<Rational>(const Rational& value) {
    return value;
}

template <>
inline double convert<double>(const Rational& value) {
    return value.get_d();
}

inline Weight to_weight(const Rational& value) { return Weight(value); }
inline Weight to_weight(double value) { return Weight(value); }

std::ostream& operator<<(std::ostream& os, const Weight& weight);

} // namespace twoway
