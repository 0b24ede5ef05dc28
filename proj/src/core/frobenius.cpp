#include "frobenius.hpp"

namespace gfm {

Tensor<Poly> theta_r(const Poly& r) {
    return tensor_normalize(r, Poly::constant(Fq::one(r.field())));
}

Poly theta_r_inv(const Tensor<Poly>& t) {
    Poly out(t.field());
    for (const auto& [key, m] : t.terms())
        out = out + Poly::monomial(t.field(), key.a, key.b) * frobenius_power(m);
    return out;
}

Tensor<RxElt> theta_rx(const RxElt& m) {
    const std::int64_t p = m.field().p;
    Poly lift = m.numerator() * Poly::monomial(m.field(), checked_mul(m.denom_exp(), p - 1), 0);
    return tensor_normalize(lift, RxElt::inv_x(m.field(), m.denom_exp()));
}

RxElt theta_rx_inv(const Tensor<RxElt>& t) {
    const std::int64_t p = t.field().p;
    RxElt out = RxElt::zero(t.field());
    for (const auto& [key, m] : t.terms()) {
        Poly num = Poly::monomial(t.field(), key.a, key.b) * frobenius_power(m.numerator());
        out = out + RxElt(num, checked_mul(p, m.denom_exp()));
    }
    return out;
}

Tensor<EElt> theta_e(const EElt& e) {
    const std::int64_t p = e.field().p;
    Tensor<EElt> out(e.field());
    for (const auto& [m, c] : e.terms()) {
        Poly front = Poly::monomial(c, checked_mul(m.a, p - 1), checked_mul(m.b, p - 1));
        out = out + tensor_normalize(front, EElt::term(Fq::one(e.field()), m.a, m.b));
    }
    return out;
}

EElt theta_e_inv(const Tensor<EElt>& t) {
    EElt out(t.field());
    for (const auto& [key, m] : t.terms())
        out = out + e_act(Poly::monomial(t.field(), key.a, key.b), frobenius_power(m));
    return out;
}

void validate_twist(const RxElt& u) {
    if (u.is_zero()) return;
    auto d = u.degree();
    if (!d->homogeneous || d->degree != 0)
        throw std::invalid_argument("structure twist must be zero or homogeneous of degree 0");
}

Tensor<SumRxR> theta_n(const RxElt& u, const SumRxR& elt) {
    validate_twist(u);
    RxElt twisted = elt.first + u * elt.second;
    return embed_first<RxElt, Poly>(theta_rx(twisted)) +
           embed_second<RxElt, Poly>(theta_r(elt.second));
}

SumRxR theta_n_inv(const RxElt& u, const Tensor<SumRxR>& t) {
    validate_twist(u);
    RxElt a = theta_rx_inv(project_first(t));
    Poly b = theta_r_inv(project_second(t));
    return SumRxR(a - u * b, b);
}

} // namespace gfm
