#include "orw/parse.hpp"

#include <cctype>
#include <optional>

namespace orw {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }

    // [-] digits [ '/' digits ], returned as the raw slice.
    std::string scan_number() {
        std::size_t start = pos;
        if (peek() == '-')
            ++pos;
        if (!digit(peek()))
            throw ParseError(pos, "expected a digit");
        while (digit(peek()))
            ++pos;
        if (peek() == '/') {
            ++pos;
            if (!digit(peek()))
                throw ParseError(pos, "expected a digit after '/'");
            while (digit(peek()))
                ++pos;
        }
        return text.substr(start, pos - start);
    }

    std::string scan_name() {
        std::size_t start = pos;
        while (name_char(peek()))
            ++pos;
        return text.substr(start, pos - start);
    }
};

GeneratorRef parse_gen(const AlgebraPresentation& algebra, Cursor& c) {
    std::size_t name_at = c.pos;
    std::string name = c.scan_name();
    int fam = algebra.family_index(name);
    if (fam < 0)
        throw ParseError(name_at, "unknown family '" + name + "' in algebra '" + algebra.name() + "'");
    const FamilySpec& spec = algebra.family(fam);
    if (c.peek() != '[') {
        if (!spec.central)
            throw ParseError(c.pos, "family '" + name + "' needs a bracketed index");
        return GeneratorRef{fam, HalfInt{}};
    }
    ++c.pos;  // '['
    std::size_t index_at = c.pos;
    std::string index_text = c.scan_number();
    std::optional<HalfInt> index = halfint_from_string(index_text);
    if (!index)
        throw ParseError(index_at, "index '" + index_text + "' is not an integer or half-integer");
    if (c.peek() != ']')
        throw ParseError(c.pos, "expected ']'");
    ++c.pos;
    GeneratorRef g{fam, *index};
    if (!algebra.valid(g))
        throw ParseError(index_at, "index " + to_string(*index) + " is off the '" + name + "' lattice");
    return g;
}

EnvElement parse_term(const AlgebraPresentation& algebra, Cursor& c) {
    c.skip_ws();
    Rational coeff = make_rational(1);
    bool explicit_coeff = false;
    if (c.peek() == '-' || digit(c.peek())) {
        std::size_t number_at = c.pos;
        std::string number = c.scan_number();
        std::optional<Rational> q = rational_from_string(number);
        if (!q)
            throw ParseError(number_at, "bad rational '" + number + "'");
        coeff = *q;
        explicit_coeff = true;
        c.skip_ws();
        if (c.peek() != '*')
            throw ParseError(c.pos, "expected '*' after the coefficient");
        ++c.pos;
        c.skip_ws();
    }
    Word word;
    if (explicit_coeff && c.peek() == '1' && !(c.pos + 1 < c.text.size() && name_char(c.text[c.pos + 1]))) {
        ++c.pos;  // the empty word
    } else {
        if (!name_start(c.peek()))
            throw ParseError(c.pos, "expected a generator");
        while (name_start(c.peek())) {
            word.push_back(parse_gen(algebra, c));
            c.skip_ws();
        }
    }
    return env_make(algebra, word, PolyScalar(coeff));
}

}  // namespace

EnvElement parse_element(const AlgebraPresentation& algebra, const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done())
        throw ParseError(c.pos, "empty input");
    if (c.peek() == '0') {
        ++c.pos;
        c.skip_ws();
        if (!c.done())
            throw ParseError(c.pos, "trailing input after '0'");
        return EnvElement(algebra.name());
    }
    EnvElement out = parse_term(algebra, c);
    for (;;) {
        c.skip_ws();
        if (c.done())
            return out;
        if (c.peek() != '+')
            throw ParseError(c.pos, "expected '+' between terms");
        ++c.pos;
        out = env_add(out, parse_term(algebra, c));
    }
}

}  // namespace orw
