#include "modules.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace gfm {

EElt EElt::term(Fq c, std::int64_t a, std::int64_t b) {
    EElt e(c.field());
    e.add_term({a, b}, c);
    return e;
}

Fq EElt::coeff(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Fq::zero(field_) : it->second;
}

void EElt::add_term(Monomial m, Fq c) {
    require_same_field(field_, c.field(), "EElt::add_term");
    if (m.a < 1 || m.b < 1)
        throw std::invalid_argument("EElt exponents must be >= 1");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EElt EElt::operator+(const EElt& o) const {
    require_same_field(field_, o.field_, "EElt add");
    EElt r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

EElt EElt::operator-() const {
    EElt r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

EElt EElt::operator-(const EElt& o) const { return *this + (-o); }

EElt EElt::operator*(const Fq& c) const {
    require_same_field(field_, c.field(), "EElt scale");
    EElt r(field_);
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

std::optional<DegreeInfo> EElt::degree() const {
    if (terms_.empty()) return std::nullopt;
    DegreeInfo info{0, true};
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::int64_t d = -checked_add(m.a, m.b);
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

std::string EElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << "/(x";
        if (m.a != 1) os << "^" << m.a;
        os << "*y";
        if (m.b != 1) os << "^" << m.b;
        os << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EElt& e) { return os << e.to_string(); }

EElt e_act(const Poly& r, const EElt& e) {
    require_same_field(r.field(), e.field(), "e_act");
    EElt out(e.field());
    for (const auto& [rm, rc] : r.terms()) {
        for (const auto& [em, ec] : e.terms()) {
            std::int64_t a = checked_sub(em.a, rm.a);
            std::int64_t b = checked_sub(em.b, rm.b);
            if (a >= 1 && b >= 1) out.add_term({a, b}, rc * ec);
        }
    }
    return out;
}

EElt e_from_fraction(const Poly& h, std::int64_t A, std::int64_t B) {
    if (A < 1 || B < 1)
        throw std::invalid_argument("e_from_fraction needs denominator exponents >= 1");
    EElt out(h.field());
    for (const auto& [m, c] : h.terms()) {
        std::int64_t a = checked_sub(A, m.a);
        std::int64_t b = checked_sub(B, m.b);
        if (a >= 1 && b >= 1) out.add_term({a, b}, c);
    }
    return out;
}

EElt frobenius_power(const EElt& e) {
    const std::int64_t p = e.field().p;
    EElt out(e.field());
    for (const auto& [m, c] : e.terms())
        out.add_term({checked_mul(m.a, p), checked_mul(m.b, p)}, c.pow(e.field().p));
    return out;
}

std::int64_t cech_default_rmax(const Poly& h, std::int64_t A, std::int64_t B) {
    auto d = h.degree();
    return checked_add(d ? d->degree : 0, checked_add(A, B));
}

bool cech_vanishes(const Poly& h, std::int64_t A, std::int64_t B, std::int64_t r_max) {
    if (r_max < 0) throw std::invalid_argument("cech_vanishes needs r_max >= 0");
    if (h.is_zero()) return true;
    for (std::int64_t r = 0; r <= r_max; ++r) {
        bool all_in = true;
        for (const auto& [m, c] : h.terms()) {
            // monomial of (xy)^r * h lies in (x^(A+r), y^(B+r))?
            std::int64_t i = checked_add(m.a, r), j = checked_add(m.b, r);
            if (i < checked_add(A, r) && j < checked_add(B, r)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return true;
    }
    return false;
}

namespace {

struct ECursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' (" + what + ") in \"" + s +
                             "\"");
    }
    std::uint64_t number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a decimal number in \"" + s + "\"");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (std::uint64_t(1) << 62)) throw ParseError("number too large");
            ++i;
        }
        return v;
    }
};

} // namespace

EElt parse_eelt(FieldId field, const std::string& text) {
    validate_field(field);
    ECursor cur{text};
    EElt out(field);
    if (cur.done()) throw ParseError("empty E-element");
    // allow the literal "0"
    {
        ECursor probe = cur;
        if (probe.eat('0') && probe.done()) return out;
    }
    bool more = true;
    while (more) {
        Fq c(field, cur.number());
        cur.expect('/', "fraction bar");
        cur.expect('(', "denominator");
        cur.expect('x', "x factor");
        std::int64_t a = cur.eat('^') ? static_cast<std::int64_t>(cur.number()) : 1;
        cur.expect('*', "separator");
        cur.expect('y', "y factor");
        std::int64_t b = cur.eat('^') ? static_cast<std::int64_t>(cur.number()) : 1;
        cur.expect(')', "denominator close");
        out.add_term({a, b}, c);
        more = cur.eat('+');
    }
    if (!cur.done()) throw ParseError("trailing input in \"" + text + "\"");
    return out;
}

RxElt::RxElt(Poly numerator, std::int64_t denom_exp) : num_(std::move(numerator)), den_(denom_exp) {
    if (den_ < 0) throw std::invalid_argument("RxElt denominator exponent must be >= 0");
    if (num_.is_zero()) {
        den_ = 0;
        return;
    }
    std::int64_t k = std::min(*num_.min_x_exponent(), den_);
    if (k > 0) {
        num_ = num_.shift_x(k);
        den_ -= k;
    }
}

RxElt RxElt::inv_x(FieldId field, std::int64_t n) {
    return RxElt(Poly::constant(Fq::one(field)), n);
}

RxElt RxElt::operator+(const RxElt& o) const {
    require_same_field(field(), o.field(), "RxElt add");
    std::int64_t n = std::max(den_, o.den_);
    Poly xs = Poly::monomial(field(), checked_sub(n, den_), 0);
    Poly xo = Poly::monomial(field(), checked_sub(n, o.den_), 0);
    return RxElt(num_ * xs + o.num_ * xo, n);
}

RxElt RxElt::operator-() const { return RxElt(-num_, den_); }

RxElt RxElt::operator-(const RxElt& o) const { return *this + (-o); }

RxElt RxElt::operator*(const RxElt& o) const {
    require_same_field(field(), o.field(), "RxElt mul");
    return RxElt(num_ * o.num_, checked_add(den_, o.den_));
}

RxElt RxElt::operator*(const Poly& r) const { return RxElt(num_ * r, den_); }

RxElt RxElt::operator*(const Fq& c) const { return RxElt(num_ * c, den_); }

std::optional<DegreeInfo> RxElt::degree() const {
    auto d = num_.degree();
    if (!d) return std::nullopt;
    return DegreeInfo{checked_sub(d->degree, den_), d->homogeneous};
}

std::string RxElt::to_string() const {
    if (is_zero()) return "0";
    if (den_ == 0) return num_.to_string();
    std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    return n + "/x" + (den_ == 1 ? "" : "^" + std::to_string(den_));
}

std::ostream& operator<<(std::ostream& os, const RxElt& m) { return os << m.to_string(); }

} // namespace gfm
