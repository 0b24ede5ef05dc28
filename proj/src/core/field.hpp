#ifndef GFM_CORE_FIELD_HPP
#define GFM_CORE_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "common.hpp"

namespace gfm {

/// An element of GF(p^e), p prime, e >= 1.
///
/// The value is the residue polynomial in a fixed generator, encoded in base
/// p: value = sum coeff_i * p^i with coeff_i in [0, p). For e = 1 this is the
/// usual residue mod p. The modulus for each (p, e) is the first monic
/// irreducible polynomial of degree e over GF(p) in this encoding order; it
/// is found once and cached, so elements stay plain values.
class Fq {
  public:
    Fq() = default;
    Fq(FieldId field, std::uint64_t value);

    static Fq zero(FieldId field) { return Fq(field, 0); }
    static Fq one(FieldId field) { return Fq(field, 1); }

    FieldId field() const { return field_; }
    std::uint64_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator-() const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    Fq inverse() const;

    Fq pow(std::uint64_t n) const;

    /// The Frobenius automorphism c -> c^p.
    Fq frobenius() const;

    /// The unique c^(1/p); inverse of frobenius since the field is perfect.
    Fq pth_root() const;

    friend bool operator==(const Fq&, const Fq&) = default;

    std::string to_string() const;

  private:
    FieldId field_{2, 1};
    std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream&, const Fq&);

/// Validates p prime, e >= 1, p^e small enough to encode; throws
/// std::invalid_argument otherwise. Cheap; also triggered by any Fq use.
void validate_field(FieldId field);

bool is_prime(std::uint64_t n);

/// p^e as a u64 (validated to fit).
std::uint64_t field_order(FieldId field);

} // namespace gfm

#endif
