#ifndef GFM_CORE_RNG_HPP
#define GFM_CORE_RNG_HPP

#include <cstdint>
#include <random>

#include "extension.hpp"
#include "hom.hpp"

namespace gfm {

/// Seeded generator with platform-independent draws (mt19937_64 output is
/// specified by the standard; the derived draws below avoid the
/// implementation-defined distributions so reports are byte-stable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish draw in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform-ish draw in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint32_t percent) { return below(100) < percent; }

  private:
    std::mt19937_64 eng_;
};

Fq random_fq(Rng& rng, FieldId field);
Fq random_nonzero_fq(Rng& rng, FieldId field);

/// Up to max_terms monomials with exponents in [0, max_exp].
Poly random_poly(Rng& rng, FieldId field, std::size_t max_terms, std::int64_t max_exp);

/// Homogeneous of the given degree (possibly zero when allow_zero).
Poly random_homogeneous_poly(Rng& rng, FieldId field, std::int64_t degree, bool allow_zero);

EElt random_eelt(Rng& rng, FieldId field, std::size_t max_terms, std::int64_t max_exp);

/// Homogeneous of the given degree <= -2.
EElt random_homogeneous_eelt(Rng& rng, FieldId field, std::int64_t degree, bool allow_zero);

/// Homogeneous element of R_x of the given degree.
RxElt random_homogeneous_rx(Rng& rng, FieldId field, std::int64_t degree);

/// Degree-d hom with window [lo, lo + precision).
HomRxE random_hom(Rng& rng, FieldId field, std::int64_t d, std::int64_t precision);

/// Degree-d hom on F(R_x) with window [0, precision).
HomFRxE random_homf(Rng& rng, FieldId field, std::int64_t d, std::int64_t precision);

/// Homogeneous tensor over graded homs of total degree d.
Tensor<HomRxE> random_hom_tensor(Rng& rng, FieldId field, std::int64_t d,
                                 std::int64_t precision);

/// Homogeneous element of *Hom(R_x,E) (+) E of total degree d.
SumHomE random_sum_hom_e(Rng& rng, FieldId field, std::int64_t d, std::int64_t precision);

} // namespace gfm

#endif
