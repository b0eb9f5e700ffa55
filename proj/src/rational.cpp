#include "orw/rational.hpp"

#include <cctype>

namespace orw {

std::optional<Rational> rational_from_string(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    // Accept [-]digits[/digits] only; mpq_class's own parser is laxer.
    std::size_t i = 0;
    auto scan_int = [&]() -> bool {
        if (i < text.size() && (text[i] == '-' || text[i] == '+'))
            ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        return i > start;
    };
    if (!scan_int())
        return std::nullopt;
    if (i < text.size()) {
        if (text[i] != '/')
            return std::nullopt;
        ++i;
        if (!scan_int() || i != text.size())
            return std::nullopt;
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        return std::nullopt;
    if (q.get_den() == 0)
        return std::nullopt;
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace orw
