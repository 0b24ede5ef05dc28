#ifndef GFM_CORE_MODULES_HPP
#define GFM_CORE_MODULES_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "common.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace gfm {

/// Element of E = H^2_(x,y)(R), the graded injective hull of k: a finite sum
/// of inverse monomials c/(x^a y^b) with a, b >= 1. Canonical form drops zero
/// coefficients, so equality is map equality. The socle generator is 1/(xy)
/// in degree -2; the degree of c/(x^a y^b) is -a-b.
class EElt {
  public:
    explicit EElt(FieldId field) : field_(field) { validate_field(field); }

    static EElt zero(FieldId field) { return EElt(field); }
    /// c/(x^a y^b); terms with a < 1 or b < 1 are rejected, not dropped.
    static EElt term(Fq c, std::int64_t a, std::int64_t b);

    FieldId field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Fq>& terms() const { return terms_; }
    Fq coeff(std::int64_t a, std::int64_t b) const;

    void add_term(Monomial m, Fq c);

    EElt operator+(const EElt& o) const;
    EElt operator-(const EElt& o) const;
    EElt operator-() const;
    EElt operator*(const Fq& c) const;

    friend bool operator==(const EElt&, const EElt&) = default;

    std::optional<DegreeInfo> degree() const;

    std::string to_string() const;

  private:
    FieldId field_;
    std::map<Monomial, Fq> terms_; // (a, b) -> c, meaning c/(x^a y^b)
};

std::ostream& operator<<(std::ostream&, const EElt&);

/// The R-action on E: x^c y^d * 1/(x^a y^b) = 1/(x^(a-c) y^(b-d)) when both
/// resulting exponents stay >= 1, else 0; extended linearly.
EElt e_act(const Poly& r, const EElt& e);

/// h/(x^A y^B) expanded into normal form: a monomial x^i y^j of h contributes
/// 1/(x^(A-i) y^(B-j)) when both exponents stay >= 1, else nothing.
EElt e_from_fraction(const Poly& h, std::int64_t A, std::int64_t B);

/// The p-th power map on E: c/(x^a y^b) -> c^p/(x^(pa) y^(pb)); additive
/// because the characteristic is p.
EElt frobenius_power(const EElt& e);

/// Vanishing of h/(x^A y^B) in the Cech presentation of E: true iff some
/// r <= r_max has (xy)^r * h inside the monomial ideal (x^(A+r), y^(B+r)).
/// Kept as an independent cross-check of the normal-form zero test.
bool cech_vanishes(const Poly& h, std::int64_t A, std::int64_t B, std::int64_t r_max);

/// Stable default bound: beyond deg(h)+A+B the membership test is monotone.
std::int64_t cech_default_rmax(const Poly& h, std::int64_t A, std::int64_t B);

/// Parses the CLI grammar for E: terms "c/(x^a*y^b)" joined by '+'.
EElt parse_eelt(FieldId field, const std::string& text);

/// Element s/x^n of the localization R_x, kept in lowest terms: when n > 0
/// the numerator has a term with x-exponent 0. Zero is (0, 0).
class RxElt {
  public:
    explicit RxElt(FieldId field) : num_(Poly::zero(field)) {}
    /// Normalizes s/x^n by cancelling common powers of x.
    RxElt(Poly numerator, std::int64_t denom_exp);

    static RxElt zero(FieldId field) { return RxElt(field); }
    static RxElt one(FieldId field) { return RxElt(Poly::constant(Fq::one(field)), 0); }
    /// 1/x^n.
    static RxElt inv_x(FieldId field, std::int64_t n);

    FieldId field() const { return num_.field(); }
    const Poly& numerator() const { return num_; }
    std::int64_t denom_exp() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RxElt operator+(const RxElt& o) const;
    RxElt operator-(const RxElt& o) const;
    RxElt operator-() const;
    RxElt operator*(const RxElt& o) const;
    RxElt operator*(const Poly& r) const;
    RxElt operator*(const Fq& c) const;

    friend bool operator==(const RxElt&, const RxElt&) = default;

    /// deg(s) - n for the stored representative; homogeneous iff s is.
    std::optional<DegreeInfo> degree() const;

    std::string to_string() const;

  private:
    Poly num_;
    std::int64_t den_ = 0;
};

std::ostream& operator<<(std::ostream&, const RxElt&);

/// Ordered pair in a direct sum of graded modules; componentwise arithmetic.
template <class A, class B>
struct Sum {
    A first;
    B second;

    Sum(A f, B s) : first(std::move(f)), second(std::move(s)) {}

    bool is_zero() const { return first.is_zero() && second.is_zero(); }

    Sum operator+(const Sum& o) const { return Sum(first + o.first, second + o.second); }
    Sum operator-() const { return Sum(-first, -second); }
    Sum operator-(const Sum& o) const { return *this + (-o); }

    friend bool operator==(const Sum&, const Sum&) = default;

    std::string to_string() const {
        return "(" + first.to_string() + "; " + second.to_string() + ")";
    }
};

} // namespace gfm

#endif
