#ifndef GFM_CORE_HOM_HPP
#define GFM_CORE_HOM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"
#include "frobenius.hpp"
#include "modules.hpp"
#include "tensor.hpp"

namespace gfm {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

/// A degree-d graded homomorphism R_x -> E in truncated coefficient form.
///
/// Writing beta = -d-1, such a map is determined by one coefficient per
/// y-exponent diagonal:
///
///     f(1/x^n) = sum_j c_j / (x^(n+1-j) y^(beta+j)),
///
/// valid for every integer n (terms with a nonpositive exponent vanish).
/// The index j runs over [d+2, oo): below d+2 the y-exponent would drop
/// under 1, so those coefficients are identically zero. Note d+2 is negative
/// for d < -2; coefficients at negative j are legitimate and do occur.
///
/// A value is stored as the coefficients from lo() = d+2 up, together with
/// known_hi(): indices j < known_hi() are exact (zero if not stored), indices
/// beyond are unknown truncation. known_hi() == kUnbounded means the map is
/// known exactly. Evaluation at 1/x^n is exact iff n < known_hi().
class HomRxE {
  public:
    static HomRxE zero(FieldId field);

    /// Coefficients listed from index lo = d+2.
    HomRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs_from_lo,
           std::int64_t known_hi);
    HomRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs_from_lo);

    /// Spec-facing constructor with 0-based indices c_0..c_{N-1}; rejects a
    /// nonzero coefficient at an index with beta + i < 1 and treats indices
    /// below 0 as known zeros. known_hi is N.
    static HomRxE from_zero_anchored(FieldId field, std::int64_t d, std::vector<Fq> c);

    FieldId field() const { return field_; }
    std::int64_t deg() const { return d_; }
    std::int64_t beta() const { return -d_ - 1; }
    std::int64_t lo() const { return d_ + 2; }
    std::int64_t known_hi() const { return hi_; }

    bool stored_zero() const { return coeffs_.empty(); }
    bool is_zero() const { return stored_zero(); } // zero as far as stored
    bool exact_zero() const { return stored_zero() && hi_ == kUnbounded; }

    /// Coefficient at index j; throws PrecisionError when j >= known_hi().
    Fq coef(std::int64_t j) const;

    /// Stored coefficients, index k meaning lo()+k; trailing zeros trimmed.
    const std::vector<Fq>& stored() const { return coeffs_; }

    /// f(1/x^n) for any integer n; exact, or throws PrecisionError.
    EElt eval(std::int64_t n) const;

    HomRxE operator+(const HomRxE& o) const;
    HomRxE operator-() const;
    HomRxE operator-(const HomRxE& o) const { return *this + (-o); }
    HomRxE operator*(const Fq& c) const;

    /// Equality of the ideal maps as certified by the stored windows: degrees
    /// match (unless a side is zero as stored) and all coefficients agree up
    /// to min(known_hi).
    friend bool operator==(const HomRxE& l, const HomRxE& r);

    std::string to_string() const;

  private:
    void trim();

    FieldId field_{2, 1};
    std::int64_t d_ = 0;
    std::int64_t hi_ = kUnbounded;
    std::vector<Fq> coeffs_; // coeffs_[k] is c_{lo()+k}; trailing zeros trimmed
};

/// f applied to a general element s/x^n of R_x.
EElt hom_apply(const HomRxE& f, const RxElt& m);

/// A degree-d graded homomorphism F(R_x) -> E in truncated coefficient form.
///
/// The anchors alpha, beta are the unique solution of d = (alpha-1)p - beta
/// with -p+2 <= beta <= 1, and
///
///     h(1 (x) 1/x^m) = sum_i c_i / (x^((m-alpha+1)p - i) y^(beta+i))
///
/// for every integer m. The beta range makes 0-based indexing complete:
/// coefficients at i < 1-beta are identically zero (and rejected if nonzero).
class HomFRxE {
  public:
    static HomFRxE zero(FieldId field);

    HomFRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs, std::int64_t known_hi);
    HomFRxE(FieldId field, std::int64_t d, std::vector<Fq> coeffs);

    FieldId field() const { return field_; }
    std::int64_t deg() const { return d_; }
    std::int64_t alpha() const { return floor_div(d_ + 1, field_.p) + 1; }
    std::int64_t beta() const { return (alpha() - 1) * field_.p - d_; }
    std::int64_t known_hi() const { return hi_; }

    bool stored_zero() const { return coeffs_.empty(); }
    bool exact_zero() const { return stored_zero() && hi_ == kUnbounded; }

    Fq coef(std::int64_t i) const;

    /// Stored coefficients c_0, c_1, ...; trailing zeros trimmed.
    const std::vector<Fq>& stored() const { return coeffs_; }

    /// h(1 (x) 1/x^m); exact iff (m - alpha + 1) p <= known_hi().
    EElt eval_level(std::int64_t m) const;

    HomFRxE operator+(const HomFRxE& o) const;
    HomFRxE operator-() const;
    HomFRxE operator-(const HomFRxE& o) const { return *this + (-o); }

    friend bool operator==(const HomFRxE& l, const HomFRxE& r);

    std::string to_string() const;

  private:
    void trim();

    FieldId field_{2, 1};
    std::int64_t d_ = 0;
    std::int64_t hi_ = kUnbounded;
    std::vector<Fq> coeffs_; // coeffs_[i] is c_i; trailing zeros trimmed
};

/// h(r (x) s/x^n) = (r s^p) . h(1 (x) 1/x^n), using the F(R_x) relations.
EElt homf_eval(const HomFRxE& h, const Poly& r, const RxElt& m);
/// Sum of homf_eval over the terms of a tensor in F(R_x).
EElt homf_eval_tensor(const HomFRxE& h, const Tensor<RxElt>& t);

/// The evaluation data attached to coefficient index i of a HomFRxE with
/// anchors (alpha, beta): the single-term map at index i satisfies
/// f_i(x^m y^n (x) y^k / x^l) = c_i/(xy), and (l-k)p - m - n - 2 = d.
struct SplitIndices {
    std::int64_t m = 0; // in [0, p)
    std::int64_t n = 0; // in [0, p)
    std::int64_t k = 0; // >= 0 whenever c_i may be nonzero
    std::int64_t l = 0;
};

SplitIndices split_indices(std::uint32_t p, std::int64_t i, std::int64_t alpha,
                           std::int64_t beta);

// --- Tensor customization for graded-hom slots -----------------------------

HomRxE module_act(const Poly& r, const HomRxE& f);
inline bool module_exact_zero(const HomRxE& f) { return f.exact_zero(); }
inline bool module_stored_zero(const HomRxE& f) { return f.stored_zero(); }
std::optional<DegreeInfo> module_degree(const HomRxE& f);
inline std::string module_to_string(const HomRxE& f) { return f.to_string(); }
inline std::string module_to_string(const HomFRxE& h) { return h.to_string(); }
template <>
struct ModuleZero<HomRxE> {
    static HomRxE make(FieldId f) { return HomRxE::zero(f); }
};

// --- The central isomorphism and the dual structure map --------------------

/// *Hom(F(R_x), E) -> F(*Hom(R_x, E)): regroups the coefficients of h by
/// index residue mod p into one tensor term per class,
/// x^(p-m-1) y^(p-n-1) (x) (class map), where the class map carries the p-th
/// roots of the class coefficients. Degree preserving.
Tensor<HomRxE> hom_split(const HomFRxE& h);

/// The inverse: r (x) f evaluates as (1 (x) 1/x^l) -> r * f(1/x^l)^p, and the
/// values assemble into canonical coefficient form. Requires a homogeneous
/// tensor. Degree preserving.
HomFRxE hom_merge(const Tensor<HomRxE>& t);

/// Precomposition with theta_{R_x}^{-1}: (result)(1 (x) 1/x^n) = f(1/x^(pn)).
/// An index shift in coefficient form; degree preserving.
HomFRxE precompose_theta_rx_inv(const HomRxE& f);
/// Inverse precomposition, recovering f(1/x^n) = (x^(n(p-1))) . h(1 (x) 1/x^n).
HomRxE precompose_theta_rx(const HomFRxE& h);

/// The graded F-module structure on *Hom(R_x, E):
/// theta_dual = hom_split after precompose_theta_rx_inv.
Tensor<HomRxE> theta_dual(const HomRxE& f);
HomRxE theta_dual_inv(const Tensor<HomRxE>& t);

/// *Hom(F(R), E) -> F(E), from the value at 1 (x) 1:
/// sum c/(x^n y^m) -> sum c (x^n y^m)^(p-1) (x) 1/(x^n y^m).
Tensor<EElt> homfr_to_fe(const EElt& value_at_unit);

} // namespace gfm

#endif
