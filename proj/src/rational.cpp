#include "ordinary/rational.hpp"

#include <cctype>
#include <ostream>

namespace ordinary {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_; }

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    if (text.front() == '+' || text.front() == '-') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    auto slash = text.find('/');
    auto dot = text.find('.');
    if (slash != std::string_view::npos && dot != std::string_view::npos) return std::nullopt;

    mpz_class num, den(1);
    if (slash != std::string_view::npos) {
        auto ns = text.substr(0, slash);
        auto ds = text.substr(slash + 1);
        if (!is_digits(ns) || !is_digits(ds)) return std::nullopt;
        num = mpz_class(std::string(ns), 10);
        den = mpz_class(std::string(ds), 10);
        if (den == 0) return std::nullopt;
    } else if (dot != std::string_view::npos) {
        auto ip = text.substr(0, dot);
        auto fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (!ip.empty() && !is_digits(ip)) return std::nullopt;
        if (!fp.empty() && !is_digits(fp)) return std::nullopt;
        num = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
        for (char ch : fp) {
            num *= 10;
            num += ch - '0';
            den *= 10;
        }
    } else {
        if (!is_digits(text)) return std::nullopt;
        num = mpz_class(std::string(text), 10);
    }
    if (neg) num = -num;
    return Rat(num, den);
}

}  // namespace ordinary
