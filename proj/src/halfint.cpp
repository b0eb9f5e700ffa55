#include "orw/halfint.hpp"

#include <cctype>
#include <cstdlib>

namespace orw {

std::string to_string(HalfInt h) {
    if (h.is_integral())
        return std::to_string(h.as_integer());
    return std::to_string(h.doubled()) + "/2";
}

std::optional<HalfInt> halfint_from_string(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+')
        ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == digits_start)
        return std::nullopt;
    std::int64_t value = std::strtoll(text.substr(0, i).c_str(), nullptr, 10);
    if (i == text.size())
        return HalfInt::whole(value);
    // Only denominator 2 is meaningful for a half-integer lattice.
    if (text.substr(i) != "/2")
        return std::nullopt;
    return HalfInt::from_doubled(value);
}

}  // namespace orw
