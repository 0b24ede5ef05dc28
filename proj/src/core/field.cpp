#include "field.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <vector>

namespace gfm {
namespace {

// --- polynomial helpers over GF(p), used only to build extension moduli ---

using PVec = std::vector<std::uint32_t>; // dense coefficients, index = degree

int deg_of(const PVec& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void trim(PVec& a) { a.resize(static_cast<std::size_t>(deg_of(a) + 1)); }

PVec mul_mod(const PVec& a, const PVec& b, const PVec& mod, std::uint32_t p) {
    PVec r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    // reduce by the monic modulus
    int md = deg_of(mod);
    for (int i = deg_of(r); i >= md; --i) {
        std::uint32_t c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= md; ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * mod[static_cast<std::size_t>(j)] % p;
            std::uint32_t& slot = r[static_cast<std::size_t>(i - md + j)];
            slot = static_cast<std::uint32_t>((slot + p - sub) % p);
        }
    }
    trim(r);
    return r;
}

PVec pow_x_mod(std::uint64_t n, const PVec& mod, std::uint32_t p) {
    PVec result{1};
    PVec base{0, 1};
    while (n > 0) {
        if (n & 1) result = mul_mod(result, base, mod, p);
        base = mul_mod(base, base, mod, p);
        n >>= 1;
    }
    return result;
}

PVec poly_gcd(PVec a, PVec b, std::uint32_t p) {
    auto mod_by = [p](PVec num, const PVec& den) {
        int dd = deg_of(den);
        std::uint32_t lead = den[static_cast<std::size_t>(dd)];
        // inverse of lead mod p by Fermat
        std::uint64_t inv = 1, base = lead, k = p - 2;
        while (k > 0) {
            if (k & 1) inv = inv * base % p;
            base = base * base % p;
            k >>= 1;
        }
        for (int i = deg_of(num); i >= dd; --i) {
            std::uint64_t c = num[static_cast<std::size_t>(i)] * inv % p;
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) {
                std::uint64_t sub = c * den[static_cast<std::size_t>(j)] % p;
                std::uint32_t& slot = num[static_cast<std::size_t>(i - dd + j)];
                slot = static_cast<std::uint32_t>((slot + p - sub) % p);
            }
        }
        trim(num);
        return num;
    };
    while (deg_of(b) >= 0) {
        PVec r = mod_by(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(const PVec& f, std::uint32_t p, std::uint32_t e) {
    // x^(p^e) == x mod f, and gcd(x^(p^(e/l)) - x, f) = 1 for prime l | e
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    PVec xq = pow_x_mod(q, f, p);
    PVec x{0, 1};
    if (xq != x) return false;
    for (std::uint32_t l = 2; l <= e; ++l) {
        if (e % l != 0) continue;
        bool lprime = true;
        for (std::uint32_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        std::uint64_t qk = 1;
        for (std::uint32_t i = 0; i < e / l; ++i) qk *= p;
        PVec xk = pow_x_mod(qk, f, p);
        // xk - x
        PVec diff = xk;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        trim(diff);
        if (deg_of(diff) < 0) return false; // x^(p^(e/l)) == x: f has small factors
        PVec g = poly_gcd(f, diff, p);
        if (deg_of(g) != 0) return false;
    }
    return true;
}

struct FieldCtx {
    PVec modulus; // monic, degree e
    std::uint64_t order = 0;
};

const FieldCtx& context_for(FieldId field) {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldCtx> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(field.p, field.e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FieldCtx ctx;
    ctx.order = field_order(field);
    if (field.e == 1) {
        ctx.modulus = PVec{0, 1};
    } else {
        std::uint64_t low_count = 1;
        for (std::uint32_t i = 0; i < field.e; ++i) low_count *= field.p;
        for (std::uint64_t c = 0; c < low_count; ++c) {
            PVec f(field.e + 1, 0);
            std::uint64_t v = c;
            for (std::uint32_t i = 0; i < field.e; ++i) {
                f[i] = static_cast<std::uint32_t>(v % field.p);
                v /= field.p;
            }
            f[field.e] = 1;
            if (is_irreducible(f, field.p, field.e)) {
                ctx.modulus = f;
                break;
            }
        }
        if (ctx.modulus.empty())
            throw std::logic_error("no irreducible modulus found"); // unreachable
    }
    return cache.emplace(key, std::move(ctx)).first->second;
}

PVec decode(std::uint64_t v, FieldId field) {
    PVec out(field.e, 0);
    for (std::uint32_t i = 0; i < field.e; ++i) {
        out[i] = static_cast<std::uint32_t>(v % field.p);
        v /= field.p;
    }
    return out;
}

std::uint64_t encode(const PVec& a, FieldId field) {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        v = v * field.p + (i < a.size() ? a[i] : 0);
    return v;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t field_order(FieldId field) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < field.e; ++i) {
        if (q > (std::uint64_t(1) << 40) / field.p)
            throw std::invalid_argument("field order too large to encode");
        q *= field.p;
    }
    return q;
}

void validate_field(FieldId field) {
    if (!is_prime(field.p))
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(field.p));
    if (field.e < 1)
        throw std::invalid_argument("field extension degree must be >= 1");
    field_order(field);
}

Fq::Fq(FieldId field, std::uint64_t value) : field_(field) {
    validate_field(field);
    value_ = value % field_order(field);
}

Fq Fq::operator+(const Fq& o) const {
    require_same_field(field_, o.field_, "Fq add");
    if (field_.e == 1) return Fq(field_, (value_ + o.value_) % field_.p);
    PVec a = decode(value_, field_), b = decode(o.value_, field_);
    for (std::uint32_t i = 0; i < field_.e; ++i)
        a[i] = (a[i] + b[i]) % field_.p;
    return Fq(field_, encode(a, field_));
}

Fq Fq::operator-() const {
    if (field_.e == 1) return Fq(field_, (field_.p - value_ % field_.p) % field_.p);
    PVec a = decode(value_, field_);
    for (std::uint32_t i = 0; i < field_.e; ++i)
        a[i] = (field_.p - a[i]) % field_.p;
    return Fq(field_, encode(a, field_));
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
    require_same_field(field_, o.field_, "Fq mul");
    if (field_.e == 1)
        return Fq(field_, value_ * o.value_ % field_.p);
    const FieldCtx& ctx = context_for(field_);
    PVec r = mul_mod(decode(value_, field_), decode(o.value_, field_), ctx.modulus, field_.p);
    return Fq(field_, encode(r, field_));
}

Fq Fq::pow(std::uint64_t n) const {
    Fq result = Fq::one(field_);
    Fq base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Fq Fq::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in GF(p^e)");
    return pow(field_order(field_) - 2);
}

Fq Fq::frobenius() const { return pow(field_.p); }

Fq Fq::pth_root() const {
    // x -> x^(p^(e-1)) inverts frobenius: (x^(p^(e-1)))^p = x^(p^e) = x
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i + 1 < field_.e; ++i) n *= field_.p;
    return pow(n);
}

std::string Fq::to_string() const { return std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Fq& c) { return os << c.to_string(); }

} // namespace gfm
