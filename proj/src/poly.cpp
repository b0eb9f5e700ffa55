#include "orw/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace orw {

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [name, e] : m)
        d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    // graded lex: at the first variable where the exponents differ, the
    // monomial with more of the alphabetically earlier variable sorts first
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first;
        if (ia->second != ib->second)
            return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false;  // equal total degree forces equal length here
}

PolyScalar::PolyScalar(const Rational& c) {
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

PolyScalar PolyScalar::variable(const std::string& name) {
    PolyScalar p;
    p.terms_.emplace(Monomial{{name, 1}}, make_rational(1));
    return p;
}

bool PolyScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PolyScalar::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> PolyScalar::variables() const {
    std::set<std::string> vars;
    for (const auto& [mono, c] : terms_)
        for (const auto& [name, e] : mono)
            vars.insert(name);
    return vars;
}

int PolyScalar::degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_)
        d = std::max(d, total_degree(mono));
    return d;
}

int PolyScalar::degree_in(const std::string& var) const {
    int d = 0;
    for (const auto& [mono, c] : terms_) {
        auto it = mono.find(var);
        if (it != mono.end())
            d = std::max(d, it->second);
    }
    return d;
}

void PolyScalar::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& rhs) {
    for (const auto& [mono, c] : rhs.terms_)
        add_term(mono, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& rhs) {
    for (const auto& [mono, c] : rhs.terms_)
        add_term(mono, -c);
    return *this;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& rhs) {
    PolyScalar out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb)
                m[name] += e;
            out.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

PolyScalar& PolyScalar::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_)
        coeff *= c;
    return *this;
}

PolyScalar PolyScalar::operator-() const {
    PolyScalar out = *this;
    for (auto& [mono, coeff] : out.terms_)
        coeff = -coeff;
    return out;
}

PolyScalar PolyScalar::substitute(const std::map<std::string, PolyScalar>& bindings) const {
    std::set<std::string> vars = variables();
    for (const auto& [name, value] : bindings) {
        if (!vars.count(name))
            throw std::invalid_argument("substitute: unknown indeterminate '" + name + "'");
    }
    return substitute_partial(bindings);
}

PolyScalar PolyScalar::substitute_partial(const std::map<std::string, PolyScalar>& bindings) const {
    PolyScalar out;
    for (const auto& [mono, coeff] : terms_) {
        PolyScalar term(coeff);
        for (const auto& [name, e] : mono) {
            auto it = bindings.find(name);
            PolyScalar base = (it != bindings.end()) ? it->second : variable(name);
            for (int i = 0; i < e; ++i)
                term *= base;
        }
        out += term;
    }
    return out;
}

std::string PolyScalar::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        bool unit = (c == 1);
        if (!unit || mono.empty())
            os << to_string(c);
        bool need_star = !unit;
        for (const auto& [name, e] : mono) {
            if (need_star)
                os << "*";
            os << name;
            if (e > 1)
                os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

PolyScalar finite_difference(const PolyScalar& p, const std::string& var, long m) {
    PolyScalar sum;
    for (long i = 0; i <= m; ++i) {
        PolyScalar shifted = p.substitute_partial({{var, PolyScalar::variable(var) + PolyScalar(make_rational(i))}});
        Rational c = make_rational(binomial(m, i), 1);
        if (i % 2 != 0)
            c = -c;
        sum += shifted * c;
    }
    return sum;
}

}  // namespace orw
