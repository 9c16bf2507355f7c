#include "mrep/rational.hpp"

#include <cctype>

namespace mrep {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    Rat magnitude;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        magnitude = Rat(BigInt{std::string(num)}, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt n = BigInt{std::string(whole)} * scale + BigInt{std::string(frac)};
        magnitude = Rat(n, scale);
    } else {
        if (!all_digits(text)) return std::nullopt;
        magnitude = Rat(BigInt{std::string(text)});
    }
    return negative ? -magnitude : magnitude;
}

std::string format_rational(const Rat& value) {
    return value.str();
}

std::string ExtRat::str() const {
    return finite_ ? format_rational(value_) : "inf";
}

}  // namespace mrep
