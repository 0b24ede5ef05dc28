#include <doctest.h>

#include "extension.hpp" // probe_hom
#include "hom.hpp"
#include "rng.hpp"

using namespace gfm;

namespace {
const FieldId F2{2, 1};
const FieldId F3{3, 1};
const FieldId F5{5, 1};

// Independent oracle: evaluate a coefficient family by writing the display
// sum term by term, without going through HomRxE::eval.
EElt display_eval(const HomRxE& f, std::int64_t n) {
    EElt out(f.field());
    for (std::int64_t j = f.lo();; ++j) {
        std::int64_t k = j - f.lo();
        if (k >= static_cast<std::int64_t>(f.stored().size())) break;
        Fq c = f.stored()[static_cast<std::size_t>(k)];
        std::int64_t xe = n + 1 - j, ye = f.beta() + j;
        if (!c.is_zero() && xe >= 1 && ye >= 1) out.add_term({xe, ye}, c);
    }
    return out;
}

// Independent oracle for hom_merge: assemble the image of a tensor by
// evaluating r * f(1/x^l)^p at descending levels and reading coefficients out
// of the display positions.
HomFRxE merge_by_evaluation(const Tensor<HomRxE>& t, std::int64_t levels) {
    FieldId field = t.field();
    const std::int64_t p = field.p;
    std::optional<std::int64_t> dopt;
    for (const auto& [key, f] : t.terms())
        if (!f.stored_zero()) dopt = key.a + key.b + p * f.deg();
    if (!dopt) return HomFRxE::zero(field);
    std::int64_t d = *dopt;
    std::int64_t alpha = floor_div(d + 1, p) + 1;
    std::int64_t beta = (alpha - 1) * p - d;
    std::vector<Fq> c;
    for (std::int64_t n = 0; n <= levels; ++n) {
        EElt v(field);
        for (const auto& [key, f] : t.terms())
            v = v + e_act(Poly::monomial(field, key.a, key.b),
                          frobenius_power(f.eval(alpha + n)));
        std::int64_t top = (n + 1) * p;
        c.resize(static_cast<std::size_t>(top), Fq::zero(field));
        for (const auto& [mono, coef] : v.terms()) {
            std::int64_t i = top - mono.a;
            REQUIRE(i >= 0);
            REQUIRE(i < top);
            REQUIRE(beta + i == mono.b); // display position must be consistent
            c[static_cast<std::size_t>(i)] = coef;
        }
    }
    return HomFRxE(field, d, c, (levels + 1) * p);
}
} // namespace

TEST_CASE("probe hom evaluates per its closed form") {
    for (FieldId f : {F2, F3}) {
        for (std::int64_t alpha : {0, 1, 2}) {
            HomRxE phi = probe_hom(f, alpha);
            std::int64_t ap2 = alpha * f.p + 2;
            CHECK(phi.deg() == -alpha * std::int64_t(f.p) - 3);
            for (std::int64_t n = 0; n <= 5; ++n)
                CHECK(phi.eval(n) == EElt::term(Fq::one(f), n + 1, ap2));
            // f(x^k) for k >= 1 is annihilated
            CHECK(phi.eval(-1).is_zero());
        }
    }
}

TEST_CASE("zero map evaluates to zero at every level") {
    HomRxE z = HomRxE::zero(F3);
    for (std::int64_t n = -3; n < 40; ++n) CHECK(z.eval(n).is_zero());
    CHECK(z.exact_zero());
}

TEST_CASE("evaluation matches the display oracle; R-linearity across levels") {
    Poly x2 = Poly::monomial(F2, 1, 0);
    Poly x3 = Poly::monomial(F3, 1, 0);
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(600 + f.p);
        Poly x = Poly::monomial(f, 1, 0);
        for (int i = 0; i < 100; ++i) {
            std::int64_t d = rng.range(-9, 2);
            HomRxE h = random_hom(rng, f, d, 12);
            for (std::int64_t n = -2; n < h.known_hi(); ++n) {
                CHECK(h.eval(n) == display_eval(h, n));
                if (n + 1 < h.known_hi()) CHECK(h.eval(n) == e_act(x, h.eval(n + 1)));
            }
            CHECK_THROWS_AS(h.eval(h.known_hi()), PrecisionError);
        }
    }
}

TEST_CASE("a frozen small evaluation") {
    // d = -3 so beta = 2 and lo = -1; coefficients (1, 1) at indices 0 and 1,
    // known exactly (zero elsewhere)
    HomRxE f(F3, -3, {Fq::zero(F3), Fq::one(F3), Fq::one(F3)}, kUnbounded);
    CHECK(f.eval(2) == EElt::term(Fq::one(F3), 3, 2) + EElt::term(Fq::one(F3), 2, 3));
    CHECK(f.eval(1) == EElt::term(Fq::one(F3), 2, 2) + EElt::term(Fq::one(F3), 1, 3));
    CHECK(f.eval(0) == EElt::term(Fq::one(F3), 1, 2));
}

TEST_CASE("structurally-zero coefficients are rejected") {
    // d = -1 means lo = 1: a nonzero c_0 would sit on the diagonal y^0
    CHECK_THROWS_AS(HomRxE::from_zero_anchored(F2, -1, {Fq::one(F2)}), std::invalid_argument);
    CHECK_NOTHROW(HomRxE::from_zero_anchored(F2, -1, {Fq::zero(F2), Fq::one(F2)}));
    // d = 0 needs the first two zero
    CHECK_THROWS_AS(HomRxE::from_zero_anchored(F2, 0, {Fq::zero(F2), Fq::one(F2)}),
                    std::invalid_argument);
    // HomFRxE: beta = 0 at d = 0, p = 3 forces c_0 = 0
    CHECK_THROWS_AS(HomFRxE(F3, 0, {Fq::one(F3)}), std::invalid_argument);
    CHECK_NOTHROW(HomFRxE(F3, 0, {Fq::zero(F3), Fq::one(F3)}));
}

TEST_CASE("hom equality works to the shared window") {
    HomRxE a(F2, -2, {Fq::one(F2), Fq::zero(F2), Fq::one(F2)}, 10);
    HomRxE b(F2, -2, {Fq::one(F2)}, 2);
    CHECK(a == b); // they agree on [0, 2)
    HomRxE c(F2, -2, {Fq::one(F2), Fq::one(F2)}, 10);
    CHECK_FALSE(a == c);
    CHECK(HomRxE::zero(F2) == HomRxE(F2, -5, {}, 7));
}

TEST_CASE("homf evaluation matches the anchored display") {
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(700 + f.p);
        const std::int64_t p = f.p;
        for (int i = 0; i < 100; ++i) {
            std::int64_t d = rng.range(-9, 2);
            HomFRxE h = random_homf(rng, f, d, 3 * p);
            std::int64_t alpha = h.alpha(), beta = h.beta();
            CHECK(d == (alpha - 1) * p - beta);
            CHECK(beta >= -p + 2);
            CHECK(beta <= 1);
            for (std::int64_t n = 0; n <= 2; ++n) {
                EElt expect(f);
                for (std::int64_t idx = 0; idx <= (n + 1) * p - 1; ++idx) {
                    Fq c = h.coef(idx);
                    std::int64_t xe = (n + 1) * p - idx, ye = beta + idx;
                    if (!c.is_zero() && xe >= 1 && ye >= 1) expect.add_term({xe, ye}, c);
                }
                CHECK(h.eval_level(alpha + n) == expect);
            }
            // everything below the anchor vanishes
            CHECK(h.eval_level(alpha - 1).is_zero());
            // R-linearity through the first slot, probed at the anchor level
            // (for alpha < 0 the probe element needs the truncated tail)
            if (alpha >= 0) {
                EElt lhs = homf_eval(h, Poly::monomial(f, 1, 0), RxElt::inv_x(f, alpha));
                EElt rhs = e_act(Poly::monomial(f, 1, 0), h.eval_level(alpha));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("split_indices: pinned examples and the degree identity") {
    auto s = split_indices(3, 4, 7, 1);
    CHECK(s.m == 1);
    CHECK(s.n == 1);
    CHECK(s.k == 1);
    CHECK(s.l == 8);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto s0 = split_indices(p, 0, 4, 1);
        CHECK(s0.m == p - 1);
        CHECK(s0.n == 0);
        CHECK(s0.k == 0);
        CHECK(s0.l == 4);
        for (std::int64_t beta = -std::int64_t(p) + 2; beta <= 1; ++beta)
            for (std::int64_t i = 0; i < 200; ++i) {
                auto si = split_indices(p, i, 6, beta);
                CHECK((si.l - si.k) * p - si.m - si.n - 2 == (6 - 1) * std::int64_t(p) - beta);
                CHECK(si.m >= 0);
                CHECK(si.m < p);
                CHECK(si.n >= 0);
                CHECK(si.n < p);
            }
    }
}

TEST_CASE("split_indices: the defining evaluation identity") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FieldId f{p, 1};
        Rng rng(4000 + p);
        for (std::int64_t beta = -std::int64_t(p) + 2; beta <= 1; ++beta) {
            std::int64_t alpha0 = 2;
            std::int64_t d = (alpha0 - 1) * p - beta;
            for (std::int64_t i = 0; i < 60; ++i) {
                if (beta + i < 1) continue; // structurally zero coefficient
                auto si = split_indices(p, i, alpha0, beta);
                CHECK(si.k >= 0);
                Fq ci = random_nonzero_fq(rng, f);
                std::vector<Fq> c(static_cast<std::size_t>(i) + 1, Fq::zero(f));
                c.back() = ci;
                HomFRxE h(f, d, c, kUnbounded); // the single-term map, known exactly
                EElt got = homf_eval(h, Poly::monomial(f, si.m, si.n),
                                     RxElt(Poly::monomial(f, 0, si.k), si.l));
                CHECK(got == EElt::term(ci, 1, 1));
            }
        }
    }
}

TEST_CASE("hom_split sends the shifted probe to one tensor term") {
    for (FieldId f : {F2, F3}) {
        for (std::int64_t alpha : {0, 1}) {
            HomRxE phi = probe_hom(f, alpha);
            HomFRxE psi1 = precompose_theta_rx_inv(phi);
            std::int64_t ap2 = alpha * f.p + 2;
            Poly front = Poly::monomial(f, 1, ap2).pow(f.p - 1);
            CHECK(hom_split(psi1) == tensor_normalize(front, phi));
        }
    }
    CHECK(hom_split(HomFRxE::zero(F2)).terms().empty());
}

TEST_CASE("hom_merge: frozen example and the display rule") {
    // f(1/x^n) = 1/(x^(n+1) y): merging 1 (x) f gives 1/(x^((n+1)p) y^p)
    for (FieldId f : {F2, F3}) {
        HomRxE g(f, -2, {Fq::one(f)}, kUnbounded); // exact: 1/(x^(n+1) y) at every level
        Tensor<HomRxE> t(f);
        t.add_reduced_term({0, 0}, g);
        HomFRxE h = hom_merge(t);
        for (std::int64_t n = 0; n <= 3; ++n)
            CHECK(h.eval_level(n) == EElt::term(Fq::one(f), (n + 1) * f.p, f.p));
    }
}

TEST_CASE("hom_merge agrees with the evaluation oracle") {
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(800 + f.p);
        for (int i = 0; i < 150; ++i) {
            std::int64_t d = rng.range(-10, 2);
            Tensor<HomRxE> t = random_hom_tensor(rng, f, d, 24);
            HomFRxE direct = hom_merge(t);
            HomFRxE oracle = merge_by_evaluation(t, 4);
            CHECK(direct == oracle);
        }
    }
}

TEST_CASE("hom_split and hom_merge invert each other") {
    for (FieldId f : {F2, F3}) {
        Rng rng(950 + f.p);
        for (int i = 0; i < 200; ++i) {
            std::int64_t d = rng.range(-10, 2);
            HomFRxE h = random_homf(rng, f, d, 40);
            Tensor<HomRxE> split = hom_split(h);
            HomFRxE back = hom_merge(split);
            CHECK(back == h);
            CHECK(back.known_hi() >= 40);

            Tensor<HomRxE> t = random_hom_tensor(rng, f, d, 40);
            CHECK(hom_split(hom_merge(t)) == t);

            if (!h.stored_zero() && !split.is_zero()) {
                auto dt = split.degree();
                CHECK(dt->homogeneous);
                CHECK(dt->degree == d);
            }
        }
    }
}

TEST_CASE("precompose_theta_rx_inv: evaluation oracle and roundtrip") {
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(1200 + f.p);
        for (int i = 0; i < 120; ++i) {
            std::int64_t d = rng.range(-9, 2);
            HomRxE g = random_hom(rng, f, d, 30);
            HomFRxE h = precompose_theta_rx_inv(g);
            CHECK(h.deg() == d);
            // h(1 (x) 1/x^n) = g(1/x^(pn))
            for (std::int64_t n = -1; n <= 3; ++n)
                CHECK(h.eval_level(n) == g.eval(f.p * n));
            CHECK(precompose_theta_rx(h) == g);
            // recovering g through theta_rx directly
            for (std::int64_t n = 0; n <= 3; ++n) {
                EElt via = e_act(Poly::monomial(f, n * (f.p - 1), 0), h.eval_level(n));
                CHECK(via == g.eval(n));
            }
        }
    }
    CHECK(precompose_theta_rx_inv(HomRxE::zero(F2)).exact_zero());
    CHECK(precompose_theta_rx(HomFRxE::zero(F2)).exact_zero());
}

TEST_CASE("theta_dual: the probe transforms to its displayed image") {
    for (FieldId f : {F2, F3}) {
        for (std::int64_t alpha : {0, 1}) {
            HomRxE phi = probe_hom(f, alpha);
            Poly front = Poly::monomial(f, 1, alpha * f.p + 2).pow(f.p - 1);
            CHECK(theta_dual(phi) == tensor_normalize(front, phi));
            CHECK(theta_dual_inv(theta_dual(phi)) == phi);
        }
    }
    CHECK(theta_dual(HomRxE::zero(F3)).terms().empty());
}

TEST_CASE("theta_dual preserves degree on random homs") {
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(1500 + f.p);
        for (int i = 0; i < 100; ++i) {
            std::int64_t d = rng.range(-9, 1);
            HomRxE g = random_hom(rng, f, d, 30);
            Tensor<HomRxE> t = theta_dual(g);
            CHECK(theta_dual_inv(t) == g);
            if (g.stored_zero() || t.is_zero()) continue;
            auto dt = t.degree();
            CHECK(dt->homogeneous);
            CHECK(dt->degree == d);
        }
    }
}

TEST_CASE("module action on homs shifts diagonals") {
    for (FieldId f : {F2, F3}) {
        Rng rng(1700 + f.p);
        for (int i = 0; i < 100; ++i) {
            std::int64_t d = rng.range(-8, 0);
            HomRxE g = random_hom(rng, f, d, 16);
            std::int64_t u = rng.range(0, 2), v = rng.range(0, 2);
            Poly mono = Poly::monomial(f, u, v);
            HomRxE shifted = module_act(mono, g);
            CHECK(shifted.deg() == d + u + v);
            for (std::int64_t n = 0; n < 10; ++n)
                CHECK(shifted.eval(n) == e_act(mono, g.eval(n)));
        }
        CHECK_THROWS_AS(module_act(parse_poly(F2, "x + 1"), probe_hom(F2, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("homfr_to_fe matches theta_e") {
    CHECK(homfr_to_fe(EElt::term(Fq::one(F2), 1, 1)) ==
          tensor_normalize(Poly::monomial(F2, 1, 1), EElt::term(Fq::one(F2), 1, 1)));
    CHECK(homfr_to_fe(EElt::zero(F3)).terms().empty());
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(1800 + f.p);
        for (int i = 0; i < 200; ++i) {
            EElt v = random_eelt(rng, f, 4, 6);
            CHECK(homfr_to_fe(v) == theta_e(v));
        }
    }
}

TEST_CASE("hom_apply uses R-linearity through the numerator") {
    HomRxE phi = probe_hom(F2, 1); // values 1/(x^(n+1) y^4)
    // phi(y/x) = y . phi(1/x) = y . 1/(x^2 y^4) = 1/(x^2 y^3)
    CHECK(hom_apply(phi, RxElt(parse_poly(F2, "y"), 1)) == EElt::term(Fq::one(F2), 2, 3));
    CHECK(hom_apply(phi, RxElt::zero(F2)).is_zero());
}
