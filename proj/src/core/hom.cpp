#include "hom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gfm {

namespace {

std::int64_t add_cap(std::int64_t bound, std::int64_t delta) {
    return bound == kUnbounded ? kUnbounded : checked_add(bound, delta);
}

// Dense vector over [lo, ...) from a sparse index map, entries >= cap dropped.
std::vector<Fq> pack(FieldId field, std::int64_t lo, std::int64_t cap,
                     const std::map<std::int64_t, Fq>& acc) {
    std::vector<Fq> out;
    for (const auto& [j, c] : acc) {
        if (c.is_zero()) continue;
        if (cap != kUnbounded && j >= cap) continue;
        if (j < lo) throw std::logic_error("coefficient below the structural bound");
        std::size_t k = static_cast<std::size_t>(j - lo);
        if (out.size() <= k) out.resize(k + 1, Fq::zero(field));
        out[k] = c;
    }
    return out;
}

} // namespace

// --- HomRxE -----------------------------------------------------------------

HomRxE HomRxE::zero(FieldId field) { return HomRxE(field, 0, {}, kUnbounded); }

HomRxE::HomRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs_from_lo,
               std::int64_t known_hi)
    : field_(field), d_(d), hi_(known_hi), coeffs_(std::move(coeffs_from_lo)) {
    validate_field(field);
    for (const Fq& c : coeffs_) require_same_field(field_, c.field(), "HomRxE");
    trim();
    if (hi_ < lo()) hi_ = lo(); // below lo() everything is structurally zero
    if (hi_ != kUnbounded && hi_ < lo() + static_cast<std::int64_t>(coeffs_.size()))
        throw std::invalid_argument("HomRxE: known_hi below the stored coefficients");
}

HomRxE::HomRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs_from_lo)
    : HomRxE(field, d, coeffs_from_lo,
             d + 2 + static_cast<std::int64_t>(coeffs_from_lo.size())) {}

HomRxE HomRxE::from_zero_anchored(FieldId field, std::int64_t d, std::vector<Fq> c) {
    std::int64_t start = d + 2; // structural bound: below it coefficients vanish
    std::int64_t n = static_cast<std::int64_t>(c.size());
    for (std::int64_t i = 0; i < std::min(start, n); ++i)
        if (!c[static_cast<std::size_t>(i)].is_zero())
            throw std::invalid_argument(
                "HomRxE: nonzero coefficient on a diagonal with y-exponent < 1");
    std::vector<Fq> from_lo;
    if (start < 0) {
        // the 0-anchored form asserts indices in [d+2, 0) are zero
        from_lo.assign(static_cast<std::size_t>(-start), Fq::zero(field));
        from_lo.insert(from_lo.end(), c.begin(), c.end());
    } else if (start < n) {
        from_lo.assign(c.begin() + static_cast<std::ptrdiff_t>(start), c.end());
    }
    return HomRxE(field, d, std::move(from_lo), std::max(n, start));
}

void HomRxE::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Fq HomRxE::coef(std::int64_t j) const {
    if (hi_ != kUnbounded && j >= hi_)
        throw PrecisionError("HomRxE: coefficient " + std::to_string(j) +
                             " beyond known window " + std::to_string(hi_));
    std::int64_t k = j - lo();
    if (k < 0 || k >= static_cast<std::int64_t>(coeffs_.size())) return Fq::zero(field_);
    return coeffs_[static_cast<std::size_t>(k)];
}

EElt HomRxE::eval(std::int64_t n) const {
    if (hi_ != kUnbounded && n >= hi_)
        throw PrecisionError("HomRxE: evaluation at 1/x^" + std::to_string(n) +
                             " needs coefficients beyond " + std::to_string(hi_));
    EElt out(field_);
    std::int64_t last = lo() + static_cast<std::int64_t>(coeffs_.size()) - 1;
    for (std::int64_t j = lo(); j <= std::min(n, last); ++j) {
        Fq c = coeffs_[static_cast<std::size_t>(j - lo())];
        if (c.is_zero()) continue;
        out.add_term({checked_add(checked_sub(n, j), 1), checked_add(beta(), j)}, c);
    }
    return out;
}

HomRxE HomRxE::operator+(const HomRxE& o) const {
    require_same_field(field_, o.field_, "HomRxE add");
    std::int64_t hi = std::min(hi_, o.hi_);
    if (stored_zero() || o.stored_zero()) {
        const HomRxE& nz = stored_zero() ? o : *this;
        std::int64_t hi2 = std::max(hi, nz.lo());
        std::vector<Fq> cs = nz.coeffs_;
        if (hi2 != kUnbounded && static_cast<std::int64_t>(cs.size()) > hi2 - nz.lo())
            cs.resize(static_cast<std::size_t>(hi2 - nz.lo()), Fq::zero(field_));
        return HomRxE(field_, nz.d_, std::move(cs), hi2);
    }
    if (d_ != o.d_)
        throw std::invalid_argument("HomRxE add: mixed degrees " + std::to_string(d_) +
                                    " and " + std::to_string(o.d_));
    std::map<std::int64_t, Fq> acc;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) acc[lo() + static_cast<std::int64_t>(k)] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        std::int64_t j = o.lo() + static_cast<std::int64_t>(k);
        auto [it, fresh] = acc.emplace(j, o.coeffs_[k]);
        if (!fresh) it->second = it->second + o.coeffs_[k];
    }
    return HomRxE(field_, d_, pack(field_, lo(), hi, acc), hi);
}

HomRxE HomRxE::operator-() const {
    std::vector<Fq> out = coeffs_;
    for (Fq& c : out) c = -c;
    return HomRxE(field_, d_, std::move(out), hi_);
}

HomRxE HomRxE::operator*(const Fq& c) const {
    require_same_field(field_, c.field(), "HomRxE scale");
    std::vector<Fq> out = coeffs_;
    for (Fq& v : out) v = v * c;
    return HomRxE(field_, d_, std::move(out), hi_);
}

bool operator==(const HomRxE& l, const HomRxE& r) {
    if (!(l.field_ == r.field_)) return false;
    if (l.stored_zero() && r.stored_zero()) return true;
    if (!l.stored_zero() && !r.stored_zero() && l.d_ != r.d_) return false;
    std::int64_t d = l.stored_zero() ? r.d_ : l.d_;
    std::int64_t lo = d + 2;
    std::int64_t window = std::min(l.hi_, r.hi_);
    auto at = [lo](const HomRxE& f, std::int64_t j) {
        std::int64_t k = j - lo;
        if (k < 0 || k >= static_cast<std::int64_t>(f.coeffs_.size()))
            return Fq::zero(f.field_);
        return f.coeffs_[static_cast<std::size_t>(k)];
    };
    std::int64_t last = lo - 1;
    last = std::max(last, lo + static_cast<std::int64_t>(l.coeffs_.size()) - 1);
    last = std::max(last, lo + static_cast<std::int64_t>(r.coeffs_.size()) - 1);
    if (window != kUnbounded) last = std::min(last, window - 1);
    for (std::int64_t j = lo; j <= last; ++j)
        if (!(at(l, j) == at(r, j))) return false;
    return true;
}

std::string HomRxE::to_string() const {
    if (stored_zero()) return "zero hom";
    std::ostringstream os;
    os << "deg " << d_ << "; beta " << beta() << "; lo " << lo() << "; c = [";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ", ";
        os << coeffs_[k].to_string();
    }
    os << "]";
    return os.str();
}

EElt hom_apply(const HomRxE& f, const RxElt& m) {
    return e_act(m.numerator(), f.eval(m.denom_exp()));
}

HomRxE module_act(const Poly& r, const HomRxE& f) {
    require_same_field(r.field(), f.field(), "module_act(hom)");
    if (r.is_zero() || f.exact_zero()) return HomRxE::zero(r.field());
    auto dr = r.degree();
    if (!dr->homogeneous)
        throw std::invalid_argument("module_act: non-homogeneous polynomial on a graded hom");
    // (x^u y^v . f)(1/x^n) = x^u y^v . f(1/x^n): indices shift by u, and the
    // diagonals whose new y-exponent drops below 1 are annihilated. Those are
    // exactly the shifted indices below the new structural bound.
    std::int64_t d2 = checked_add(f.deg(), dr->degree);
    std::int64_t lo2 = d2 + 2;
    std::int64_t hi2 = kUnbounded;
    std::map<std::int64_t, Fq> acc;
    for (const auto& [mono, c] : r.terms()) {
        hi2 = std::min(hi2, add_cap(f.known_hi(), mono.a));
        for (std::size_t k = 0; k < f.stored().size(); ++k) {
            if (f.stored()[k].is_zero()) continue;
            std::int64_t j2 = checked_add(f.lo() + static_cast<std::int64_t>(k), mono.a);
            if (j2 < lo2) continue;
            auto [it, fresh] = acc.emplace(j2, f.stored()[k] * c);
            if (!fresh) it->second = it->second + f.stored()[k] * c;
        }
    }
    return HomRxE(r.field(), d2, pack(r.field(), lo2, hi2, acc), hi2);
}

std::optional<DegreeInfo> module_degree(const HomRxE& f) {
    if (f.stored_zero()) return std::nullopt;
    return DegreeInfo{f.deg(), true};
}

// --- HomFRxE ----------------------------------------------------------------

HomFRxE HomFRxE::zero(FieldId field) { return HomFRxE(field, 0, {}, kUnbounded); }

HomFRxE::HomFRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs, std::int64_t known_hi)
    : field_(field), d_(d), hi_(known_hi), coeffs_(std::move(coeffs)) {
    validate_field(field);
    for (const Fq& c : coeffs_) require_same_field(field_, c.field(), "HomFRxE");
    std::int64_t forced = 1 - beta();
    for (std::int64_t i = 0; i < std::min(forced, static_cast<std::int64_t>(coeffs_.size())); ++i)
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
            throw std::invalid_argument(
                "HomFRxE: nonzero coefficient on a diagonal with y-exponent < 1");
    trim();
    if (hi_ < 0) hi_ = 0;
    if (hi_ != kUnbounded && hi_ < static_cast<std::int64_t>(coeffs_.size()))
        throw std::invalid_argument("HomFRxE: known_hi below the stored coefficients");
}

HomFRxE::HomFRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs)
    : HomFRxE(field, d, coeffs, static_cast<std::int64_t>(coeffs.size())) {}

void HomFRxE::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Fq HomFRxE::coef(std::int64_t i) const {
    if (i < 0) return Fq::zero(field_);
    if (hi_ != kUnbounded && i >= hi_)
        throw PrecisionError("HomFRxE: coefficient " + std::to_string(i) +
                             " beyond known window " + std::to_string(hi_));
    if (i >= static_cast<std::int64_t>(coeffs_.size())) return Fq::zero(field_);
    return coeffs_[static_cast<std::size_t>(i)];
}

EElt HomFRxE::eval_level(std::int64_t m) const {
    const std::int64_t p = field_.p;
    std::int64_t top = checked_mul(checked_add(checked_sub(m, alpha()), 1), p);
    if (hi_ != kUnbounded && top > hi_)
        throw PrecisionError("HomFRxE: evaluation at level " + std::to_string(m) +
                             " needs coefficients beyond " + std::to_string(hi_));
    EElt out(field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        std::int64_t i = static_cast<std::int64_t>(k);
        std::int64_t xe = checked_sub(top, i);
        std::int64_t ye = checked_add(beta(), i);
        if (xe >= 1 && ye >= 1) out.add_term({xe, ye}, coeffs_[k]);
    }
    return out;
}

HomFRxE HomFRxE::operator+(const HomFRxE& o) const {
    require_same_field(field_, o.field_, "HomFRxE add");
    std::int64_t hi = std::min(hi_, o.hi_);
    if (stored_zero() || o.stored_zero()) {
        const HomFRxE& nz = stored_zero() ? o : *this;
        std::int64_t hi2 = std::max<std::int64_t>(hi, 0);
        std::vector<Fq> cs = nz.coeffs_;
        if (hi2 != kUnbounded && static_cast<std::int64_t>(cs.size()) > hi2)
            cs.resize(static_cast<std::size_t>(hi2), Fq::zero(field_));
        return HomFRxE(field_, nz.d_, std::move(cs), hi2);
    }
    if (d_ != o.d_)
        throw std::invalid_argument("HomFRxE add: mixed degrees");
    std::map<std::int64_t, Fq> acc;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) acc[static_cast<std::int64_t>(k)] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        auto [it, fresh] = acc.emplace(static_cast<std::int64_t>(k), o.coeffs_[k]);
        if (!fresh) it->second = it->second + o.coeffs_[k];
    }
    return HomFRxE(field_, d_, pack(field_, 0, hi, acc), hi);
}

HomFRxE HomFRxE::operator-() const {
    std::vector<Fq> out = coeffs_;
    for (Fq& c : out) c = -c;
    return HomFRxE(field_, d_, std::move(out), hi_);
}

bool operator==(const HomFRxE& l, const HomFRxE& r) {
    if (!(l.field_ == r.field_)) return false;
    if (l.stored_zero() && r.stored_zero()) return true;
    if (!l.stored_zero() && !r.stored_zero() && l.d_ != r.d_) return false;
    std::int64_t window = std::min(l.hi_, r.hi_);
    std::int64_t last = static_cast<std::int64_t>(std::max(l.coeffs_.size(), r.coeffs_.size())) - 1;
    if (window != kUnbounded) last = std::min(last, window - 1);
    auto at = [](const HomFRxE& f, std::int64_t i) {
        if (i >= static_cast<std::int64_t>(f.coeffs_.size())) return Fq::zero(f.field_);
        return f.coeffs_[static_cast<std::size_t>(i)];
    };
    for (std::int64_t i = 0; i <= last; ++i)
        if (!(at(l, i) == at(r, i))) return false;
    return true;
}

std::string HomFRxE::to_string() const {
    if (stored_zero()) return "zero hom";
    std::ostringstream os;
    os << "deg " << d_ << "; alpha " << alpha() << "; beta " << beta() << "; c = [";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ", ";
        os << coeffs_[k].to_string();
    }
    os << "]";
    return os.str();
}

EElt homf_eval(const HomFRxE& h, const Poly& r, const RxElt& m) {
    require_same_field(h.field(), r.field(), "homf_eval");
    Poly front = r * frobenius_power(m.numerator());
    return e_act(front, h.eval_level(m.denom_exp()));
}

EElt homf_eval_tensor(const HomFRxE& h, const Tensor<RxElt>& t) {
    EElt out(h.field());
    for (const auto& [key, m] : t.terms())
        out = out + homf_eval(h, Poly::monomial(h.field(), key.a, key.b), m);
    return out;
}

SplitIndices split_indices(std::uint32_t p, std::int64_t i, std::int64_t alpha,
                           std::int64_t beta) {
    if (i < 0) throw std::invalid_argument("split_indices: index must be >= 0");
    const std::int64_t P = p;
    std::int64_t r = i % P, q = i / P;
    SplitIndices out;
    out.m = P - 1 - r;
    out.l = checked_add(alpha, q);
    out.n = mod_floor(beta + r - 1, P);
    out.k = floor_div(checked_add(beta, i) - 1, P);
    return out;
}

// --- the central isomorphism ------------------------------------------------

Tensor<HomRxE> hom_split(const HomFRxE& h) {
    const FieldId field = h.field();
    const std::int64_t p = field.p;
    Tensor<HomRxE> out(field);
    if (h.exact_zero()) return out;
    const std::int64_t alpha = h.alpha(), beta = h.beta();
    for (std::int64_t r0 = 0; r0 < p; ++r0) {
        // all indices i = q p + r0 share the same evaluation data mod p
        std::int64_t kq0 = floor_div(beta + r0 - 1, p);
        std::int64_t n = beta + r0 - 1 - p * kq0;
        std::int64_t dclass = alpha - kq0 - 2;
        std::int64_t loclass = dclass + 2;
        std::map<std::int64_t, Fq> acc;
        for (std::int64_t i = r0; i < static_cast<std::int64_t>(h.stored().size()); i += p) {
            const Fq& c = h.stored()[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::int64_t q = (i - r0) / p;
            acc[checked_add(alpha, q)] = c.pth_root(); // index l_i = alpha + q
        }
        std::int64_t hiclass = kUnbounded;
        if (h.known_hi() != kUnbounded) {
            std::int64_t qmax = floor_div(h.known_hi() - 1 - r0, p);
            hiclass = checked_add(alpha, qmax) + 1;
        }
        HomRxE piece(field, dclass, pack(field, loclass, hiclass, acc), hiclass);
        out.add_reduced_term({r0, p - 1 - n}, piece);
    }
    return out;
}

HomFRxE hom_merge(const Tensor<HomRxE>& t) {
    const FieldId field = t.field();
    const std::int64_t p = field.p;
    // the tensor grading fixes the degree; every slot must be compatible
    std::optional<std::int64_t> dopt;
    for (const auto& [key, f] : t.terms()) {
        if (f.stored_zero()) continue;
        std::int64_t d = checked_add(checked_add(key.a, key.b), checked_mul(p, f.deg()));
        if (dopt && *dopt != d)
            throw std::invalid_argument("hom_merge: tensor is not homogeneous");
        dopt = d;
    }
    if (!dopt) {
        bool truncated = false;
        for (const auto& [key, f] : t.terms())
            if (!f.exact_zero()) truncated = true;
        return truncated ? HomFRxE(field, 0, {}, 0) : HomFRxE::zero(field);
    }
    const std::int64_t d = *dopt;
    const std::int64_t alpha = floor_div(d + 1, p) + 1;
    const std::int64_t beta = (alpha - 1) * p - d;
    std::int64_t hi = kUnbounded;
    std::map<std::int64_t, Fq> acc;
    for (const auto& [key, f] : t.terms()) {
        std::int64_t df;
        if (f.stored_zero()) {
            std::int64_t rem = d - key.a - key.b;
            if (mod_floor(rem, p) != 0) continue; // forced exactly zero by degree
            df = floor_div(rem, p);
        } else {
            df = f.deg();
        }
        // r (x) f evaluates as (1 (x) 1/x^l) -> r f(1/x^l)^p; in coefficient
        // form the diagonal j of f lands on index i = p (j - alpha) + a.
        if (f.known_hi() != kUnbounded)
            hi = std::min(hi, checked_add(checked_mul(p, checked_sub(f.known_hi(), alpha)), key.a));
        std::int64_t lof = df + 2;
        for (std::size_t k = 0; k < f.stored().size(); ++k) {
            const Fq& c = f.stored()[k];
            if (c.is_zero()) continue;
            std::int64_t j = lof + static_cast<std::int64_t>(k);
            std::int64_t i = checked_add(checked_mul(p, checked_sub(j, alpha)), key.a);
            if (i < 1 - beta)
                throw std::logic_error("hom_merge: coefficient below the structural bound");
            Fq cp = c.pow(field.p);
            auto [it, fresh] = acc.emplace(i, cp);
            if (!fresh) it->second = it->second + cp;
        }
    }
    if (hi < 0) hi = 0;
    return HomFRxE(field, d, pack(field, 0, hi, acc), hi);
}

HomFRxE precompose_theta_rx_inv(const HomRxE& f) {
    const FieldId field = f.field();
    const std::int64_t p = field.p;
    if (f.exact_zero()) return HomFRxE::zero(field);
    const std::int64_t d = f.deg();
    const std::int64_t alpha = floor_div(d + 1, p) + 1;
    // value at 1 (x) 1/x^m is f(1/x^(pm)): in coefficient form a pure index
    // shift c_i = c^f_{i + s} with s = (alpha - 1) p + 1.
    const std::int64_t s = checked_add(checked_mul(alpha - 1, p), 1);
    std::map<std::int64_t, Fq> acc;
    for (std::size_t k = 0; k < f.stored().size(); ++k) {
        if (f.stored()[k].is_zero()) continue;
        std::int64_t j = f.lo() + static_cast<std::int64_t>(k);
        std::int64_t i = checked_sub(j, s);
        if (i < 0) throw std::logic_error("precompose_theta_rx_inv: negative index");
        acc[i] = f.stored()[k];
    }
    std::int64_t hi = f.known_hi() == kUnbounded ? kUnbounded
                                                 : std::max<std::int64_t>(f.known_hi() - s, 0);
    return HomFRxE(field, d, pack(field, 0, hi, acc), hi);
}

HomRxE precompose_theta_rx(const HomFRxE& h) {
    const FieldId field = h.field();
    const std::int64_t p = field.p;
    if (h.exact_zero()) return HomRxE::zero(field);
    const std::int64_t d = h.deg();
    const std::int64_t s = checked_add(checked_mul(h.alpha() - 1, p), 1);
    const std::int64_t lo = d + 2;
    std::map<std::int64_t, Fq> acc;
    for (std::size_t k = 0; k < h.stored().size(); ++k) {
        if (h.stored()[k].is_zero()) continue;
        std::int64_t j = checked_add(static_cast<std::int64_t>(k), s);
        if (j < lo) throw std::logic_error("precompose_theta_rx: index below bound");
        acc[j] = h.stored()[k];
    }
    std::int64_t hi = add_cap(h.known_hi(), s);
    return HomRxE(field, d, pack(field, lo, hi, acc), hi);
}

Tensor<HomRxE> theta_dual(const HomRxE& f) { return hom_split(precompose_theta_rx_inv(f)); }

HomRxE theta_dual_inv(const Tensor<HomRxE>& t) { return precompose_theta_rx(hom_merge(t)); }

Tensor<EElt> homfr_to_fe(const EElt& value_at_unit) {
    const FieldId field = value_at_unit.field();
    Tensor<EElt> out(field);
    for (const auto& [m, c] : value_at_unit.terms()) {
        Poly front = Poly::monomial(field, m.a, m.b).pow(field.p - 1) * c;
        out = out + tensor_normalize(front, EElt::term(Fq::one(field), m.a, m.b));
    }
    return out;
}

} // namespace gfm
