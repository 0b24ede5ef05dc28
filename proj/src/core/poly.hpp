#ifndef GFM_CORE_POLY_HPP
#define GFM_CORE_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "common.hpp"
#include "field.hpp"

namespace gfm {

/// Exponent pair of a monomial x^a * y^b.
struct Monomial {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct DegreeInfo {
    std::int64_t degree = 0;   // max a+b over stored monomials
    bool homogeneous = false;  // all stored monomials share that degree
};

/// Sparse bivariate polynomial over GF(p^e); the ring R = k[x,y].
///
/// Canonical form stores no zero coefficients, so equality is map equality.
/// All stored exponents are >= 0.
class Poly {
  public:
    explicit Poly(FieldId field) : field_(field) { validate_field(field); }

    static Poly zero(FieldId field) { return Poly(field); }
    static Poly constant(Fq c);
    static Poly monomial(Fq c, std::int64_t a, std::int64_t b);
    /// x^a * y^b with coefficient 1.
    static Poly monomial(FieldId field, std::int64_t a, std::int64_t b);

    FieldId field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Fq>& terms() const { return terms_; }

    Fq coeff(std::int64_t a, std::int64_t b) const;
    void add_term(Monomial m, Fq c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Fq& c) const;
    Poly pow(std::uint64_t n) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// nullopt for the zero polynomial ("undefined degree").
    std::optional<DegreeInfo> degree() const;

    /// Divides by x^k; throws std::invalid_argument if some term has a < k.
    Poly shift_x(std::int64_t k) const;

    /// Smallest x-exponent over stored terms; nullopt when zero.
    std::optional<std::int64_t> min_x_exponent() const;

    std::string to_string() const;

  private:
    FieldId field_;
    std::map<Monomial, Fq> terms_;
};

std::ostream& operator<<(std::ostream&, const Poly&);

/// r with every coefficient raised to the p and exponents scaled by p; the
/// image of r under the Frobenius endomorphism of R.
Poly frobenius_power(const Poly& r);

/// Writes r = sum over (a,b) in [0,p)^2 of x^a y^b * (component)^p.
/// The components are the unique polynomials making that identity hold; this
/// is what moves factors across the tensor in F(M) normal forms.
std::map<std::pair<std::int64_t, std::int64_t>, Poly> frobenius_decompose(const Poly& r);

/// Parses the CLI grammar: terms "c*x^a*y^b" joined by '+', coefficient a
/// decimal residue, omitted exponent 1, omitted factor 0 (e.g. "y^2 + 2*x*y").
Poly parse_poly(FieldId field, const std::string& text);

} // namespace gfm

#endif
