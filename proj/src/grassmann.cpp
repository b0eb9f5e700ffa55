#include "orw/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace orw {

bool ExtMonomialOrder::operator()(const ExtMonomial& a, const ExtMonomial& b) const {
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

ExtElement::ExtElement(ExtMonomial m, Rational c) { add(m, c); }

void ExtElement::add(const ExtMonomial& m, const Rational& c) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (!(m[i - 1] < m[i]))
            throw std::invalid_argument("ExtElement: monomial indices must strictly increase");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int ExtElement::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<int>(m.size()));
    return d;
}

ExtElement& ExtElement::operator+=(const ExtElement& rhs) {
    for (const auto& [m, c] : rhs.terms_)
        add(m, c);
    return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& rhs) {
    for (const auto& [m, c] : rhs.terms_)
        add(m, Rational(-c));
    return *this;
}

ExtElement& ExtElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

namespace {

// merge two increasing lists; sign counts the transpositions, zero on repeats
bool merge_monomials(const ExtMonomial& a, const ExtMonomial& b, ExtMonomial& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else if (b[j] < a[i]) {
            // b[j] jumps over the remaining a-letters
            if ((a.size() - i) % 2 != 0)
                sign = -sign;
            out.push_back(b[j++]);
        } else {
            return false;
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return true;
}

}  // namespace

ExtElement ext_wedge(const ExtElement& a, const ExtElement& b) {
    ExtElement out;
    ExtMonomial merged;
    int sign = 1;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (!merge_monomials(ma, mb, merged, sign))
                continue;
            out.add(merged, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    return out;
}

std::string ext_str(const ExtElement& e) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c) << " * ";
        if (m.empty()) {
            os << "1";
            continue;
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            os << (i ? "^" : "") << "G[" << to_string(m[i]) << "]";
    }
    return os.str();
}

bool ExtWindow::contains(HalfInt r) const {
    long d = r.doubled();
    if (d < lo2 || d > hi2)
        return false;
    return ((d - lo2) % 2) == 0;
}

std::vector<HalfInt> ExtWindow::indices() const {
    std::vector<HalfInt> out;
    for (int d = lo2; d <= hi2; d += 2)
        out.push_back(HalfInt::from_doubled(d));
    return out;
}

std::size_t ExtWindow::size() const {
    return lo2 > hi2 ? 0 : static_cast<std::size_t>((hi2 - lo2) / 2 + 1);
}

ExtElement ext_inject(const AlgebraPresentation& algebra, const EnvElement& e, const ExtWindow& w) {
    if ((w.hi2 - w.lo2) % 2 != 0)
        throw std::invalid_argument("ext_inject: window endpoints must share parity");
    ExtElement out;
    int family = -1;
    for (const auto& [word, coeff] : e.terms()) {
        if (!coeff.is_constant())
            throw std::invalid_argument("ext_inject: symbolic coefficients have no exterior image");
        ExtElement img(ExtMonomial{}, coeff.constant_value());
        for (GeneratorRef g : word) {
            if (algebra.parity(g) != Parity::odd)
                throw std::invalid_argument("ext_inject: letter " + algebra.gen_str(g) + " is not odd");
            if (family >= 0 && g.family != family)
                throw std::invalid_argument("ext_inject: letters must come from one odd family");
            family = g.family;
            if (!w.contains(g.index))
                throw std::invalid_argument("ext_inject: index " + to_string(g.index) + " outside window");
            img = ext_wedge(img, ExtElement(ExtMonomial{g.index}));
        }
        out += img;
    }
    return out;
}

ExtElement ext_omega(HalfInt r, HalfInt s, long m) {
    if (m < 0)
        throw std::invalid_argument("ext_omega: negative order");
    ExtElement out;
    for (long i = 0; i <= m; ++i) {
        Rational c = make_rational(binomial(m, i), Integer(1));
        if (i % 2 != 0)
            c = -c;
        HalfInt a = r - HalfInt::whole(i), b = s + HalfInt::whole(i);
        if (a == b)
            continue;
        if (b < a) {
            std::swap(a, b);
            c = -c;
        }
        out.add(ExtMonomial{a, b}, c);
    }
    return out;
}

ExtElement certificate_expand(const std::vector<CertificateTerm>& cert) {
    ExtElement out;
    for (const auto& t : cert) {
        ExtElement piece = ext_wedge(ExtElement(t.left, t.coeff), ext_omega(t.r, t.s, t.m));
        out += ext_wedge(piece, ExtElement(t.right));
    }
    return out;
}

const IdealBasis::Row* IdealBasis::row_for(const ExtMonomial& lead) const {
    auto it = pivots_.find(lead);
    return it == pivots_.end() ? nullptr : &rows_[it->second];
}

bool IdealBasis::insert(ExtElement v, std::map<std::size_t, Rational> combo) {
    while (!v.is_zero()) {
        const ExtMonomial& lead = v.terms().begin()->first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end())
            break;
        Rational c = v.terms().begin()->second;  // pivot rows are monic
        const Row& r = rows_[it->second];
        ExtElement scaled = r.value;
        scaled *= c;
        v -= scaled;
        for (const auto& [id, w] : r.combo) {
            auto [cit, ins] = combo.emplace(id, Rational(-(c * w)));
            if (!ins) {
                cit->second -= c * w;
                if (cit->second == 0)
                    combo.erase(cit);
            }
        }
    }
    if (v.is_zero())
        return false;
    Rational lc = v.terms().begin()->second;
    Rational inv = make_rational(1);
    inv /= lc;
    v *= inv;
    for (auto& [id, w] : combo)
        w *= inv;
    ExtMonomial pivot = v.terms().begin()->first;
    // keep earlier rows fully reduced against the new pivot
    for (auto& row : rows_) {
        auto hit = row.value.terms().find(pivot);
        if (hit == row.value.terms().end())
            continue;
        Rational c = hit->second;
        ExtElement scaled = v;
        scaled *= c;
        row.value -= scaled;
        for (const auto& [id, w] : combo) {
            auto [cit, ins] = row.combo.emplace(id, Rational(-(c * w)));
            if (!ins) {
                cit->second -= c * w;
                if (cit->second == 0)
                    row.combo.erase(cit);
            }
        }
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(Row{std::move(v), std::move(combo)});
    return true;
}

namespace {

void monomials_upto(const std::vector<HalfInt>& idx, int max_deg,
                    const std::function<void(const ExtMonomial&)>& emit) {
    ExtMonomial cur;
    // iterative subset enumeration, degree-bounded
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        emit(cur);
        if (static_cast<int>(cur.size()) == max_deg)
            return;
        for (std::size_t i = from; i < idx.size(); ++i) {
            cur.push_back(idx[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

IdealBasis ideal_build(const ExtWindow& w, long m, int cap) {
    if (w.lo2 > w.hi2)
        throw std::invalid_argument("ideal_build: empty window");
    if ((w.hi2 - w.lo2) % 2 != 0)
        throw std::invalid_argument("ideal_build: window endpoints must share parity");
    if (m < 0 || cap < 0)
        throw std::invalid_argument("ideal_build: order and cap must be non-negative");

    IdealBasis I;
    I.window_ = w;
    I.m_ = m;
    I.cap_ = cap;
    int n = static_cast<int>(w.size());
    I.cap_vacuous_ = cap > n;
    int eff_cap = std::min(cap, n);

    // relations whose letters r-i, s+i all stay inside the window
    std::vector<std::pair<HalfInt, HalfInt>> rels;
    std::vector<ExtElement> rel_values;
    for (int r2 = w.lo2 + 2 * static_cast<int>(m); r2 <= w.hi2; r2 += 2)
        for (int s2 = w.lo2; s2 <= w.hi2 - 2 * static_cast<int>(m); s2 += 2) {
            HalfInt r = HalfInt::from_doubled(r2), s = HalfInt::from_doubled(s2);
            ExtElement g = ext_omega(r, s, m);
            if (g.is_zero())
                continue;
            rels.emplace_back(r, s);
            rel_values.push_back(std::move(g));
        }

    auto idx = w.indices();
    for (std::size_t gi = 0; gi < rels.size(); ++gi) {
        monomials_upto(idx, eff_cap - 2, [&](const ExtMonomial& x) {
            ExtElement row = ext_wedge(ExtElement(x), rel_values[gi]);
            if (row.is_zero())
                return;
            std::size_t id = I.spanning_.size();
            I.spanning_.push_back({x, rels[gi].first, rels[gi].second});
            if (!I.insert(std::move(row), {{id, make_rational(1)}}))
                I.spanning_.pop_back();  // dependent row: id never referenced
        });
    }
    return I;
}

MemberResult member(const ExtElement& x, const IdealBasis& I) {
    if (x.degree() > I.cap())
        throw std::invalid_argument("member: element degree exceeds the ideal's cap");
    MemberResult res;
    ExtElement v = x;
    std::map<std::size_t, Rational> accum;
    while (!v.is_zero()) {
        const ExtMonomial& lead = v.terms().begin()->first;
        const IdealBasis::Row* row = I.row_for(lead);
        if (!row) {
            res.member = false;
            res.remainder = std::move(v);
            return res;
        }
        Rational c = v.terms().begin()->second;
        ExtElement scaled = row->value;
        scaled *= c;
        v -= scaled;
        for (const auto& [id, w] : row->combo) {
            auto [it, ins] = accum.emplace(id, Rational(c * w));
            if (!ins) {
                it->second += c * w;
                if (it->second == 0)
                    accum.erase(it);
            }
        }
    }
    res.member = true;
    for (const auto& [id, c] : accum) {
        const auto& se = I.spanning()[id];
        res.certificate.push_back({c, se.left, se.r, se.s, I.m(), ExtMonomial{}});
    }
    return res;
}

Lemma33Report verify_lemma33(long m, long k, HalfInt s, int left_margin2, int right_margin2) {
    if (m < 0 || m > 2)
        throw std::invalid_argument("verify_lemma33: order out of the desk-scale range [0, 2]");
    if (k < 1 || k > 4)
        throw std::invalid_argument("verify_lemma33: run length out of the desk-scale range [1, 4]");
    int def_left = 2 * static_cast<int>(m) + 2, def_right = 2;
    if (left_margin2 < 0)
        left_margin2 = def_left;
    if (right_margin2 < 0)
        right_margin2 = def_right;

    Lemma33Report rep;
    rep.m = m;
    rep.k = k;
    rep.s = s;
    rep.window = ExtWindow{static_cast<int>(s.doubled()) - left_margin2,
                           static_cast<int>(s.doubled()) + 2 * static_cast<int>(m + k) + right_margin2};
    IdealBasis I = ideal_build(rep.window, m, static_cast<int>(m) + 2);
    rep.cap_vacuous = I.cap_vacuous();

    std::vector<HalfInt> run;
    for (long t = 0; t <= m + k; ++t)
        run.push_back(s + HalfInt::whole(t));

    // all (m+2)-subsets of the run
    std::vector<std::size_t> pick(static_cast<std::size_t>(m) + 2);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == pick.size()) {
            ExtMonomial mono;
            for (auto i : pick)
                mono.push_back(run[i]);
            ++rep.checked;
            auto res = member(ExtElement(mono), I);
            if (!res.member)
                rep.failures.push_back(ext_str(ExtElement(mono)) + ": remainder " + ext_str(res.remainder));
            return;
        }
        for (std::size_t i = from; i < run.size(); ++i) {
            pick[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    if (run.size() >= pick.size())
        rec(0, 0);

    rep.margin_limited =
        !rep.failures.empty() && (left_margin2 < def_left || right_margin2 < def_right);
    return rep;
}

}  // namespace orw
