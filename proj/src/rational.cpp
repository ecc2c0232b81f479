#include "logalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace logalg {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(std::string_view s) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text[0] == '-')
            throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
        Int den = parse_int(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        std::string digits(whole);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        if (frac.empty()) throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Int w = parse_int(digits);
        Int f(std::string(frac), 10);
        Rat r(negative ? Int(w * scale - f) : Int(w * scale + f), scale);
        r.canonicalize();
        return r;
    }
    return Rat(parse_int(text));
}

Rat pow(const Rat& r, long n) {
    if (n < 0) {
        if (r == 0) throw std::domain_error("zero raised to a negative power");
        Rat inv = 1 / r;
        return pow(inv, -n);
    }
    Rat result(1);
    Rat base = r;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace logalg
