#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace gfm {

Poly Poly::constant(Fq c) {
    Poly r(c.field());
    r.add_term({0, 0}, c);
    return r;
}

Poly Poly::monomial(Fq c, std::int64_t a, std::int64_t b) {
    Poly r(c.field());
    r.add_term({a, b}, c);
    return r;
}

Poly Poly::monomial(FieldId field, std::int64_t a, std::int64_t b) {
    return monomial(Fq::one(field), a, b);
}

Fq Poly::coeff(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Fq::zero(field_) : it->second;
}

void Poly::add_term(Monomial m, Fq c) {
    require_same_field(field_, c.field(), "Poly::add_term");
    if (m.a < 0 || m.b < 0)
        throw std::invalid_argument("Poly exponents must be >= 0");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_, "Poly add");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_, "Poly mul");
    Poly r(field_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({checked_add(m1.a, m2.a), checked_add(m1.b, m2.b)}, c1 * c2);
    return r;
}

Poly Poly::operator*(const Fq& c) const {
    require_same_field(field_, c.field(), "Poly scale");
    Poly r(field_);
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

Poly Poly::pow(std::uint64_t n) const {
    Poly result = Poly::constant(Fq::one(field_));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::optional<DegreeInfo> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    DegreeInfo info{0, true};
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::int64_t d = checked_add(m.a, m.b);
        if (first) {
            info.degree = d;
            first = false;
        } else if (d != info.degree) {
            info.homogeneous = false;
            if (d > info.degree) info.degree = d;
        }
    }
    return info;
}

Poly Poly::shift_x(std::int64_t k) const {
    Poly r(field_);
    for (const auto& [m, c] : terms_) {
        if (m.a < k)
            throw std::invalid_argument("shift_x: term not divisible by x^k");
        r.terms_.emplace(Monomial{m.a - k, m.b}, c);
    }
    return r;
}

std::optional<std::int64_t> Poly::min_x_exponent() const {
    if (terms_.empty()) return std::nullopt;
    std::optional<std::int64_t> best;
    for (const auto& [m, c] : terms_)
        if (!best || m.a < *best) best = m.a;
    return best;
}

Poly frobenius_power(const Poly& r) {
    const std::int64_t p = r.field().p;
    Poly out(r.field());
    for (const auto& [m, c] : r.terms())
        out.add_term({checked_mul(m.a, p), checked_mul(m.b, p)}, c.pow(r.field().p));
    return out;
}

std::map<std::pair<std::int64_t, std::int64_t>, Poly> frobenius_decompose(const Poly& r) {
    const std::int64_t p = r.field().p;
    std::map<std::pair<std::int64_t, std::int64_t>, Poly> out;
    for (const auto& [m, c] : r.terms()) {
        std::int64_t a = m.a % p, b = m.b % p;
        auto [it, inserted] = out.emplace(std::make_pair(a, b), Poly(r.field()));
        it->second.add_term({(m.a - a) / p, (m.b - b) / p}, c.pth_root());
    }
    // drop classes that collapsed to zero (cannot happen term-by-term, but
    // keep the canonical-form guarantee cheap to state)
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // graded order, highest total degree first, then highest x-exponent
    std::vector<std::pair<Monomial, Fq>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
        std::int64_t dl = l.first.a + l.first.b, dr = r.first.a + r.first.b;
        if (dl != dr) return dl > dr;
        return l.first.a > r.first.a;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        if (!first) os << " + ";
        first = false;
        bool unit = (c == Fq::one(c.field()));
        bool bare = (m.a == 0 && m.b == 0);
        if (!unit || bare) os << c.to_string();
        bool need_star = !unit || bare;
        auto put = [&](char v, std::int64_t exp) {
            if (exp == 0) return;
            if (need_star) os << "*";
            os << v;
            if (exp != 1) os << "^" << exp;
            need_star = true;
        };
        put('x', m.a);
        put('y', m.b);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::uint64_t number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a decimal number at position " + std::to_string(i) +
                             " in \"" + s + "\"");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (std::uint64_t(1) << 62))
                throw ParseError("number too large in \"" + s + "\"");
            ++i;
        }
        return v;
    }
};

std::int64_t exponent_after(Cursor& cur) {
    if (cur.eat('^')) return static_cast<std::int64_t>(cur.number());
    return 1;
}

} // namespace

Poly parse_poly(FieldId field, const std::string& text) {
    validate_field(field);
    Cursor cur{text};
    Poly out(field);
    if (cur.done()) throw ParseError("empty polynomial");
    bool more = true;
    while (more) {
        Fq c = Fq::one(field);
        std::int64_t a = 0, b = 0;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char ch = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                if (saw_factor)
                    throw ParseError("coefficient must lead its term in \"" + text + "\"");
                c = Fq(field, cur.number());
            } else if (ch == 'x') {
                cur.eat('x');
                a = checked_add(a, exponent_after(cur));
            } else if (ch == 'y') {
                cur.eat('y');
                b = checked_add(b, exponent_after(cur));
            } else {
                throw ParseError("unexpected character '" + std::string(1, ch) + "' in \"" +
                                 text + "\"");
            }
            saw_factor = true;
            expect_factor = cur.eat('*');
        }
        out.add_term({a, b}, c);
        more = cur.eat('+');
    }
    if (!cur.done())
        throw ParseError("trailing input in \"" + text + "\"");
    return out;
}

} // namespace gfm
