#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace mrep {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "12", "-3", "2.75" or "p/q" exactly into a rational.
// Returns nullopt on anything else (no whitespace, no exponents).
std::optional<Rat> parse_rational(std::string_view text);

// Canonical text form: bare integer when the denominator is 1, else "p/q"
// in lowest terms. Inverse of parse_rational on its own output.
std::string format_rational(const Rat& value);

// Rational extended with a +infinity sentinel. Addition saturates; ordering
// places infinity above every finite value. Only the operations the
// shortest-path code needs are provided.
class ExtRat {
public:
    ExtRat() : finite_(true), value_(0) {}
    ExtRat(Rat value) : finite_(true), value_(std::move(value)) {}

    static ExtRat infinity() {
        ExtRat r;
        r.finite_ = false;
        return r;
    }

    bool is_infinite() const { return !finite_; }

    // Valid only when finite.
    const Rat& value() const { return value_; }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtRat(a.value_ + b.value_);
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    friend bool operator<(const ExtRat& a, const Rat& b) { return a.finite_ && a.value_ < b; }
    friend bool operator>(const ExtRat& a, const Rat& b) { return !a.finite_ || a.value_ > b; }
    friend bool operator==(const ExtRat& a, const Rat& b) { return a.finite_ && a.value_ == b; }

    std::string str() const;

private:
    bool finite_;
    Rat value_;
};

}  // namespace mrep
