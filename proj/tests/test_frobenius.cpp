#include <doctest.h>

#include "frobenius.hpp"
#include "rng.hpp"

using namespace gfm;

namespace {
const FieldId F2{2, 1};
const FieldId F3{3, 1};
const FieldId F5{5, 1};

template <class M>
Tensor<M> single(FieldId f, std::int64_t a, std::int64_t b, M m) {
    Tensor<M> t(f);
    t.add_reduced_term({a, b}, std::move(m));
    return t;
}
} // namespace

TEST_CASE("tensor_normalize: pinned examples") {
    // p=2: x^3 (x) 1/x = x (x) x^2/x = x (x) x... reduced via x^3 = x * x^2
    auto t1 = tensor_normalize(parse_poly(F2, "x^3"), RxElt::inv_x(F2, 1));
    CHECK(t1 == single(F2, 1, 0, RxElt(parse_poly(F2, "1"), 0)));

    auto t2 = tensor_normalize(parse_poly(F2, "y^2"), RxElt::inv_x(F2, 1));
    CHECK(t2 == single(F2, 0, 0, RxElt(parse_poly(F2, "y"), 1)));

    // p=3: x^4 y^3 (x) 1/(xy) dies: the inner factor xy annihilates the socle
    auto t3 = tensor_normalize(parse_poly(F3, "x^4*y^3"), EElt::term(Fq::one(F3), 1, 1));
    CHECK(t3.is_zero());
    CHECK(t3.terms().empty());
}

TEST_CASE("tensor_normalize respects the defining relation") {
    // normalize(r * s^p, m) = normalize(r, s.m)
    for (FieldId f : {F2, F3}) {
        Rng rng(400 + f.p);
        for (int i = 0; i < 200; ++i) {
            Poly r = random_poly(rng, f, 3, 4);
            Poly s = random_poly(rng, f, 2, 2);
            EElt m = random_eelt(rng, f, 3, 8);
            CHECK(tensor_normalize(r * frobenius_power(s), m) ==
                  tensor_normalize(r, e_act(s, m)));
        }
    }
}

TEST_CASE("theta_rx: pinned examples") {
    CHECK(theta_rx(RxElt::inv_x(F2, 1)) == single(F2, 1, 0, RxElt::inv_x(F2, 1)));
    CHECK(theta_rx(RxElt::one(F3)) == single(F3, 0, 0, RxElt::one(F3)));
    // inverse formula: 1 (x) 1/x -> 1/x^p
    for (FieldId f : {F2, F3, F5})
        CHECK(theta_rx_inv(single(f, 0, 0, RxElt::inv_x(f, 1))) == RxElt::inv_x(f, f.p));
}

TEST_CASE("theta_r: pinned examples") {
    CHECK(theta_r(Poly::constant(Fq::one(F2))) ==
          single(F2, 0, 0, Poly::constant(Fq::one(F2))));
    // x (x) y -> x y^p
    CHECK(theta_r_inv(single(F3, 1, 0, parse_poly(F3, "y"))) == parse_poly(F3, "x*y^3"));
    // p=2: x^2 (x) 1 normalizes to 1 (x) x
    CHECK(theta_r(parse_poly(F2, "x^2")) == single(F2, 0, 0, parse_poly(F2, "x")));
}

TEST_CASE("theta_e: pinned examples") {
    for (FieldId f : {F2, F3}) {
        EElt socle = EElt::term(Fq::one(f), 1, 1);
        auto t = theta_e(socle);
        CHECK(t == tensor_normalize(Poly::monomial(f, f.p - 1, f.p - 1), socle));
        CHECK(theta_e_inv(single(f, 0, 0, socle)) == EElt::term(Fq::one(f), f.p, f.p));
        CHECK(theta_e_inv(t) == socle);
    }
}

TEST_CASE("theta_n: the twisted sum structure") {
    RxElt u = RxElt(parse_poly(F2, "y"), 1);
    // inverse of 1 (x) (0,1) is (-y/x, 1)
    auto t = single(F2, 0, 0, SumRxR(RxElt::zero(F2), Poly::constant(Fq::one(F2))));
    SumRxR img = theta_n_inv(u, t);
    CHECK(img.first == -u);
    CHECK(img.second == Poly::constant(Fq::one(F2)));

    // u = 0 is the componentwise structure
    Rng rng(88);
    for (int i = 0; i < 100; ++i) {
        SumRxR elt(RxElt(random_poly(rng, F3, 3, 3), rng.range(0, 2)),
                   random_poly(rng, F3, 3, 3));
        auto split = theta_n(RxElt::zero(F3), elt);
        auto expect = embed_first<RxElt, Poly>(theta_rx(elt.first)) +
                      embed_second<RxElt, Poly>(theta_r(elt.second));
        CHECK(split == expect);
    }

    // p=2, u=y/x: theta_N(0,1) = x*y (x) (1/x, 0) + 1 (x) (0, 1)
    auto tn = theta_n(u, SumRxR(RxElt::zero(F2), Poly::constant(Fq::one(F2))));
    auto want = single(F2, 1, 1, SumRxR(RxElt::inv_x(F2, 1), Poly::zero(F2))) +
                single(F2, 0, 0, SumRxR(RxElt::zero(F2), Poly::constant(Fq::one(F2))));
    CHECK(tn == want);
    CHECK(theta_n_inv(u, tn) == SumRxR(RxElt::zero(F2), Poly::constant(Fq::one(F2))));

    CHECK_THROWS_AS(theta_n(RxElt(parse_poly(F2, "y"), 0), SumRxR(RxElt::zero(F2), Poly::zero(F2))),
                    std::invalid_argument);
}

TEST_CASE("theta_n is additive and k-linear for each twist") {
    for (FieldId f : {F2, F3}) {
        Rng rng(500 + f.p);
        RxElt u(Poly::monomial(f, 0, 1), 1);
        for (int i = 0; i < 100; ++i) {
            SumRxR a(RxElt(random_poly(rng, f, 3, 3), rng.range(0, 2)),
                     random_poly(rng, f, 3, 3));
            SumRxR b(RxElt(random_poly(rng, f, 3, 3), rng.range(0, 2)),
                     random_poly(rng, f, 3, 3));
            CHECK(theta_n(u, a + b) == theta_n(u, a) + theta_n(u, b));
        }
    }
}

TEST_CASE("roundtrips and degree preservation for the base structure maps") {
    for (FieldId f : {F2, F3, F5}) {
        Rng rng(900 + f.p);
        RxElt u(Poly::monomial(f, 0, 1), 1);
        for (int i = 0; i < 200; ++i) {
            std::int64_t dp = rng.range(0, 6);
            Poly r = random_homogeneous_poly(rng, f, dp, true);
            CHECK(theta_r_inv(theta_r(r)) == r);
            if (!r.is_zero()) {
                auto dt = theta_r(r).degree();
                CHECK(dt->homogeneous);
                CHECK(dt->degree == dp);
            }

            std::int64_t dm = rng.range(-4, 4);
            RxElt m = random_homogeneous_rx(rng, f, dm);
            CHECK(theta_rx_inv(theta_rx(m)) == m);
            if (!m.is_zero()) {
                auto dt = theta_rx(m).degree();
                CHECK(dt->homogeneous);
                CHECK(dt->degree == dm);
            }

            std::int64_t de = rng.range(-8, -2);
            EElt e = random_homogeneous_eelt(rng, f, de, true);
            CHECK(theta_e_inv(theta_e(e)) == e);
            if (!e.is_zero()) {
                auto dt = theta_e(e).degree();
                CHECK(dt->homogeneous);
                CHECK(dt->degree == de);
            }

            std::int64_t dn = rng.range(-3, 3);
            SumRxR n(random_homogeneous_rx(rng, f, dn),
                     dn >= 0 ? random_homogeneous_poly(rng, f, dn, true) : Poly::zero(f));
            CHECK(theta_n_inv(u, theta_n(u, n)) == n);
            if (!n.is_zero()) {
                auto dt = theta_n(u, n).degree();
                CHECK(dt->homogeneous);
                CHECK(dt->degree == dn);
            }
        }
    }
}

TEST_CASE("structure maps invert from the tensor side too") {
    for (FieldId f : {F2, F3}) {
        Rng rng(1300 + f.p);
        for (int i = 0; i < 100; ++i) {
            Tensor<Poly> tp(f);
            Tensor<RxElt> tm(f);
            Tensor<EElt> te(f);
            std::size_t terms = 1 + rng.below(3);
            for (std::size_t k = 0; k < terms; ++k) {
                Monomial key{rng.range(0, f.p - 1), rng.range(0, f.p - 1)};
                tp.add_reduced_term(key, random_poly(rng, f, 2, 3));
                tm.add_reduced_term(key, RxElt(random_poly(rng, f, 2, 3), rng.range(0, 2)));
                te.add_reduced_term(key, random_eelt(rng, f, 2, 5));
            }
            CHECK(theta_r(theta_r_inv(tp)) == tp);
            CHECK(theta_rx(theta_rx_inv(tm)) == tm);
            CHECK(theta_e(theta_e_inv(te)) == te);
        }
    }
}
