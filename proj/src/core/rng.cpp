#include "rng.hpp"

namespace gfm {

Fq random_fq(Rng& rng, FieldId field) { return Fq(field, rng.below(field_order(field))); }

Fq random_nonzero_fq(Rng& rng, FieldId field) {
    return Fq(field, 1 + rng.below(field_order(field) - 1));
}

Poly random_poly(Rng& rng, FieldId field, std::size_t max_terms, std::int64_t max_exp) {
    Poly out(field);
    std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i)
        out.add_term({rng.range(0, max_exp), rng.range(0, max_exp)}, random_fq(rng, field));
    return out;
}

Poly random_homogeneous_poly(Rng& rng, FieldId field, std::int64_t degree, bool allow_zero) {
    if (degree < 0) throw std::invalid_argument("random_homogeneous_poly: degree < 0");
    Poly out(field);
    for (int attempt = 0; attempt < 8; ++attempt) {
        out = Poly(field);
        std::size_t terms = 1 + rng.below(static_cast<std::uint64_t>(degree) + 1);
        for (std::size_t i = 0; i < terms; ++i) {
            std::int64_t a = rng.range(0, degree);
            out.add_term({a, degree - a}, random_fq(rng, field));
        }
        if (!out.is_zero() || allow_zero) return out;
    }
    out.add_term({0, degree}, random_nonzero_fq(rng, field));
    return out;
}

EElt random_eelt(Rng& rng, FieldId field, std::size_t max_terms, std::int64_t max_exp) {
    EElt out(field);
    std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i)
        out.add_term({rng.range(1, max_exp), rng.range(1, max_exp)}, random_fq(rng, field));
    return out;
}

EElt random_homogeneous_eelt(Rng& rng, FieldId field, std::int64_t degree, bool allow_zero) {
    if (degree > -2) throw std::invalid_argument("random_homogeneous_eelt: degree > -2");
    EElt out(field);
    std::int64_t total = -degree;
    for (int attempt = 0; attempt < 8; ++attempt) {
        out = EElt(field);
        std::size_t terms = 1 + rng.below(3);
        for (std::size_t i = 0; i < terms; ++i) {
            std::int64_t a = rng.range(1, total - 1);
            out.add_term({a, total - a}, random_fq(rng, field));
        }
        if (!out.is_zero() || allow_zero) return out;
    }
    out.add_term({1, total - 1}, random_nonzero_fq(rng, field));
    return out;
}

RxElt random_homogeneous_rx(Rng& rng, FieldId field, std::int64_t degree) {
    std::int64_t den = rng.range(0, 4);
    std::int64_t num_deg = degree + den;
    if (num_deg < 0) {
        den += -num_deg;
        num_deg = 0;
    }
    return RxElt(random_homogeneous_poly(rng, field, num_deg, false), den);
}

HomRxE random_hom(Rng& rng, FieldId field, std::int64_t d, std::int64_t precision) {
    std::vector<Fq> c;
    c.reserve(static_cast<std::size_t>(precision));
    for (std::int64_t i = 0; i < precision; ++i)
        c.push_back(rng.chance(60) ? Fq::zero(field) : random_fq(rng, field));
    return HomRxE(field, d, std::move(c), d + 2 + precision);
}

HomFRxE random_homf(Rng& rng, FieldId field, std::int64_t d, std::int64_t precision) {
    std::int64_t alpha = floor_div(d + 1, field.p) + 1;
    std::int64_t beta = (alpha - 1) * field.p - d;
    std::vector<Fq> c;
    c.reserve(static_cast<std::size_t>(precision));
    for (std::int64_t i = 0; i < precision; ++i) {
        if (i < 1 - beta)
            c.push_back(Fq::zero(field)); // structurally zero diagonal
        else
            c.push_back(rng.chance(60) ? Fq::zero(field) : random_fq(rng, field));
    }
    return HomFRxE(field, d, std::move(c), precision);
}

Tensor<HomRxE> random_hom_tensor(Rng& rng, FieldId field, std::int64_t d,
                                 std::int64_t precision) {
    const std::int64_t p = field.p;
    Tensor<HomRxE> out(field);
    std::size_t terms = 1 + rng.below(3);
    for (std::size_t i = 0; i < terms; ++i) {
        std::int64_t a = rng.range(0, p - 1);
        std::int64_t rem = mod_floor(d - a, p);
        // pick b in [0, p) with a + b = d mod p
        std::int64_t b = rem;
        std::int64_t df = floor_div(d - a - b, p);
        out.add_reduced_term({a, b}, random_hom(rng, field, df, precision));
    }
    return out;
}

SumHomE random_sum_hom_e(Rng& rng, FieldId field, std::int64_t d, std::int64_t precision) {
    HomRxE f = random_hom(rng, field, d, precision);
    EElt e = d <= -2 && !rng.chance(25) ? random_homogeneous_eelt(rng, field, d, true)
                                        : EElt::zero(field);
    return SumHomE(std::move(f), std::move(e));
}

} // namespace gfm
