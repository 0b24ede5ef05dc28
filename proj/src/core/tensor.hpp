#ifndef GFM_CORE_TENSOR_HPP
#define GFM_CORE_TENSOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "common.hpp"
#include "modules.hpp"
#include "poly.hpp"

namespace gfm {

// Customization points for the module slot of a tensor. Each concrete module
// type provides: the R-action, a zero factory, exactness/zero predicates and
// a degree. Overloads for graded homs live in hom.hpp.

inline Poly module_act(const Poly& r, const Poly& m) { return r * m; }
inline RxElt module_act(const Poly& r, const RxElt& m) { return m * r; }
inline EElt module_act(const Poly& r, const EElt& m) { return e_act(r, m); }

template <class A, class B>
Sum<A, B> module_act(const Poly& r, const Sum<A, B>& m) {
    return Sum<A, B>(module_act(r, m.first), module_act(r, m.second));
}

/// True when the element is zero with nothing hidden behind a truncation.
inline bool module_exact_zero(const Poly& m) { return m.is_zero(); }
inline bool module_exact_zero(const RxElt& m) { return m.is_zero(); }
inline bool module_exact_zero(const EElt& m) { return m.is_zero(); }
template <class A, class B>
bool module_exact_zero(const Sum<A, B>& m) {
    return module_exact_zero(m.first) && module_exact_zero(m.second);
}

/// True when every stored coefficient is zero (truncations may hide more).
inline bool module_stored_zero(const Poly& m) { return m.is_zero(); }
inline bool module_stored_zero(const RxElt& m) { return m.is_zero(); }
inline bool module_stored_zero(const EElt& m) { return m.is_zero(); }
template <class A, class B>
bool module_stored_zero(const Sum<A, B>& m) {
    return module_stored_zero(m.first) && module_stored_zero(m.second);
}

inline std::optional<DegreeInfo> module_degree(const Poly& m) { return m.degree(); }
inline std::optional<DegreeInfo> module_degree(const RxElt& m) { return m.degree(); }
inline std::optional<DegreeInfo> module_degree(const EElt& m) { return m.degree(); }

template <class A, class B>
std::optional<DegreeInfo> module_degree(const Sum<A, B>& m) {
    auto da = module_degree(m.first);
    auto db = module_degree(m.second);
    if (!da) return db;
    if (!db) return da;
    if (da->degree == db->degree)
        return DegreeInfo{da->degree, da->homogeneous && db->homogeneous};
    return DegreeInfo{std::max(da->degree, db->degree), false};
}

inline std::string module_to_string(const Poly& m) { return m.to_string(); }
inline std::string module_to_string(const RxElt& m) { return m.to_string(); }
inline std::string module_to_string(const EElt& m) { return m.to_string(); }
template <class A, class B>
std::string module_to_string(const Sum<A, B>& m) {
    return m.to_string();
}

template <class M>
struct ModuleZero;
template <>
struct ModuleZero<Poly> {
    static Poly make(FieldId f) { return Poly::zero(f); }
};
template <>
struct ModuleZero<RxElt> {
    static RxElt make(FieldId f) { return RxElt::zero(f); }
};
template <>
struct ModuleZero<EElt> {
    static EElt make(FieldId f) { return EElt::zero(f); }
};
template <class A, class B>
struct ModuleZero<Sum<A, B>> {
    static Sum<A, B> make(FieldId f) {
        return Sum<A, B>(ModuleZero<A>::make(f), ModuleZero<B>::make(f));
    }
};

/// Normal-form element of F(M) = F_*R (x)_R M: a sum of x^a y^b (x) m with
/// 0 <= a, b < p, obtained by moving every p-th power of the first factor
/// across the tensor (s * r^p (x) m = s (x) r * m).
///
/// Grading: deg(x^a y^b (x) m) = a + b + p * deg(m).
///
/// Slots whose element is zero-as-stored but truncated are kept, so the
/// precision carried by graded-hom slots survives normalization; only exact
/// zeros are dropped.
template <class M>
class Tensor {
  public:
    explicit Tensor(FieldId field) : field_(field) { validate_field(field); }

    static Tensor zero(FieldId field) { return Tensor(field); }

    FieldId field() const { return field_; }
    const std::map<Monomial, M>& terms() const { return terms_; }
    bool is_zero() const {
        for (const auto& [m, v] : terms_)
            if (!module_stored_zero(v)) return false;
        return true;
    }

    /// Adds x^a y^b (x) m with (a, b) already in [0, p)^2.
    void add_reduced_term(Monomial key, const M& m) {
        if (key.a < 0 || key.b < 0 || key.a >= field_.p || key.b >= field_.p)
            throw std::invalid_argument("tensor first factor not in normal form");
        if (module_exact_zero(m)) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, m);
        } else {
            it->second = it->second + m;
            if (module_exact_zero(it->second)) terms_.erase(it);
        }
    }

    Tensor operator+(const Tensor& o) const {
        require_same_field(field_, o.field_, "Tensor add");
        Tensor r = *this;
        for (const auto& [key, m] : o.terms_) r.add_reduced_term(key, m);
        return r;
    }

    Tensor operator-() const {
        Tensor r(field_);
        for (const auto& [key, m] : terms_) r.terms_.emplace(key, -m);
        return r;
    }

    Tensor operator-(const Tensor& o) const { return *this + (-o); }

    /// Equality up to stored information: a missing slot matches a slot whose
    /// stored coefficients are all zero.
    friend bool operator==(const Tensor& l, const Tensor& r) {
        if (!(l.field_ == r.field_)) return false;
        auto li = l.terms_.begin();
        auto ri = r.terms_.begin();
        while (li != l.terms_.end() || ri != r.terms_.end()) {
            if (ri == r.terms_.end() || (li != l.terms_.end() && li->first < ri->first)) {
                if (!module_stored_zero(li->second)) return false;
                ++li;
            } else if (li == l.terms_.end() || ri->first < li->first) {
                if (!module_stored_zero(ri->second)) return false;
                ++ri;
            } else {
                if (!(li->second == ri->second)) return false;
                ++li;
                ++ri;
            }
        }
        return true;
    }

    /// Degree under deg(x^a y^b (x) m) = a + b + p deg(m); nullopt when zero.
    std::optional<DegreeInfo> degree() const {
        std::optional<DegreeInfo> out;
        for (const auto& [key, m] : terms_) {
            auto dm = module_degree(m);
            if (!dm) continue;
            std::int64_t d = checked_add(checked_add(key.a, key.b),
                                         checked_mul(field_.p, dm->degree));
            if (!out) {
                out = DegreeInfo{d, dm->homogeneous};
            } else if (out->degree == d) {
                out->homogeneous = out->homogeneous && dm->homogeneous;
            } else {
                out->degree = std::max(out->degree, d);
                out->homogeneous = false;
            }
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, m] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (key.a == 0 && key.b == 0) {
                os << "1";
            } else {
                bool star = false;
                if (key.a > 0) {
                    os << "x";
                    if (key.a > 1) os << "^" << key.a;
                    star = true;
                }
                if (key.b > 0) {
                    if (star) os << "*";
                    os << "y";
                    if (key.b > 1) os << "^" << key.b;
                }
            }
            os << " (x) " << module_to_string(m);
        }
        return os.str();
    }

  private:
    FieldId field_;
    std::map<Monomial, M> terms_;
};

template <class M>
std::string module_to_string(const Tensor<M>& t) {
    return t.to_string();
}

/// r (x) m rewritten in normal form: decompose r = sum x^a y^b (s_ab)^p and
/// move each s_ab across the tensor onto m.
template <class M>
Tensor<M> tensor_normalize(const Poly& r, const M& m) {
    Tensor<M> out(r.field());
    if (module_exact_zero(m)) return out;
    for (const auto& [key, inner] : frobenius_decompose(r))
        out.add_reduced_term({key.first, key.second}, module_act(inner, m));
    return out;
}

// Embedding and projection between F(A (+) B) and F(A) (+) F(B); tensors
// over a sum keep both components in one slot, per the normal form above.

template <class A, class B>
Tensor<Sum<A, B>> embed_first(const Tensor<A>& t) {
    Tensor<Sum<A, B>> out(t.field());
    for (const auto& [key, m] : t.terms())
        out.add_reduced_term(key, Sum<A, B>(m, ModuleZero<B>::make(t.field())));
    return out;
}

template <class A, class B>
Tensor<Sum<A, B>> embed_second(const Tensor<B>& t) {
    Tensor<Sum<A, B>> out(t.field());
    for (const auto& [key, m] : t.terms())
        out.add_reduced_term(key, Sum<A, B>(ModuleZero<A>::make(t.field()), m));
    return out;
}

template <class A, class B>
Tensor<A> project_first(const Tensor<Sum<A, B>>& t) {
    Tensor<A> out(t.field());
    for (const auto& [key, m] : t.terms()) out.add_reduced_term(key, m.first);
    return out;
}

template <class A, class B>
Tensor<B> project_second(const Tensor<Sum<A, B>>& t) {
    Tensor<B> out(t.field());
    for (const auto& [key, m] : t.terms()) out.add_reduced_term(key, m.second);
    return out;
}

} // namespace gfm

#endif
