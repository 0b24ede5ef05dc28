#include "extension.hpp"

#include <sstream>

namespace gfm {

HomRxE probe_hom(FieldId field, std::int64_t alpha) {
    std::int64_t d = checked_sub(0, checked_add(checked_mul(alpha, field.p), 3));
    // single coefficient 1 at index 0; lo = d+2 <= -1, so pad zeros up to it
    std::vector<Fq> c(static_cast<std::size_t>(0 - (d + 2)) + 1, Fq::zero(field));
    c.back() = Fq::one(field);
    return HomRxE(field, d, std::move(c), kUnbounded);
}

SumHomE probe_element(FieldId field, std::int64_t alpha) {
    std::int64_t ap2 = checked_add(checked_mul(alpha, field.p), 2);
    return SumHomE(probe_hom(field, alpha), EElt::term(Fq::one(field), 1, ap2));
}

RxElt default_twist(FieldId field) { return RxElt(Poly::monomial(field, 0, 1), 1); }

Tensor<SumHomE> theta_split(const SumHomE& elt) {
    return embed_first<HomRxE, EElt>(theta_dual(elt.first)) +
           embed_second<HomRxE, EElt>(theta_e(elt.second));
}

SumHomE theta_split_inv(const Tensor<SumHomE>& t) {
    return SumHomE(theta_dual_inv(project_first(t)), theta_e_inv(project_second(t)));
}

Tensor<SumHomE> theta_ext(const RxElt& u, const SumHomE& elt) {
    validate_twist(u);
    // pair hom phi' on R_x (+) R, precomposed with theta_N(u)^{-1}: the R_x
    // side is f(1/x^(pn)) and the R side value is phi'(-u, 1) = e - f(u)
    HomFRxE psi1 = precompose_theta_rx_inv(elt.first);
    EElt psi2 = elt.second - hom_apply(elt.first, u);
    return embed_first<HomRxE, EElt>(hom_split(psi1)) +
           embed_second<HomRxE, EElt>(homfr_to_fe(psi2));
}

SumHomE theta_ext_inv(const RxElt& u, const Tensor<SumHomE>& t) {
    validate_twist(u);
    HomFRxE psi1 = hom_merge(project_first(t));
    EElt psi2 = theta_e_inv(project_second(t));
    HomRxE f = precompose_theta_rx(psi1);
    // e = phi'(0, 1) = psi(theta_N(0, 1)) = psi1 on theta_rx(u) plus psi2
    EElt e = homf_eval_tensor(psi1, theta_rx(u)) + psi2;
    return SumHomE(f, e);
}

std::string SplitCandidate::to_string() const {
    if (is_identity()) return "alpha=" + std::to_string(alpha) + " t=0";
    return "alpha=" + std::to_string(alpha) + " t=" + t.to_string();
}

void validate_candidate(const SplitCandidate& c) {
    if (c.is_identity()) return;
    if (c.alpha < 0) throw std::invalid_argument("candidate: alpha must be >= 0");
    auto d = c.t.degree();
    if (!d->homogeneous || d->degree != c.alpha)
        throw std::invalid_argument("candidate: t must be homogeneous of degree alpha");
    if (c.t.coeff(0, c.alpha).is_zero())
        throw std::invalid_argument("candidate: t needs a nonzero y^alpha coefficient");
}

SumHomE apply_candidate(const SplitCandidate& c, const SumHomE& elt) {
    if (c.is_identity()) return elt;
    return SumHomE(elt.first, elt.second + hom_apply(elt.first, RxElt(c.t, c.alpha)));
}

SumHomE square_defect(const RxElt& u, const SplitCandidate& c, const SumHomE& test) {
    validate_twist(u);
    validate_candidate(c);
    Tensor<SumHomE> via_l = theta_ext(u, apply_candidate(c, test));
    Tensor<SumHomE> base = theta_split(test);
    Tensor<SumHomE> via_split(test.first.field());
    for (const auto& [key, m] : base.terms())
        via_split.add_reduced_term(key, apply_candidate(c, m));
    SumHomE a = theta_split_inv(via_l);
    SumHomE b = theta_split_inv(via_split);
    return a - b;
}

EElt obstruction(const SplitCandidate& c, FieldId field) {
    validate_candidate(c);
    const std::int64_t p = field.p;
    const std::int64_t ap1 = checked_add(checked_mul(c.alpha, p), 1);
    Poly one = Poly::constant(Fq::one(field));
    EElt out = -e_from_fraction(one, 2, ap1);
    if (!c.is_identity()) {
        out = out + e_from_fraction(c.t, checked_add(c.alpha, 1), ap1 + 1);
        out = out - e_from_fraction(frobenius_power(c.t), ap1, ap1 + 1);
    }
    return out;
}

SearchResult splitting_search(FieldId field, std::int64_t alpha_max, const RxElt& u) {
    validate_field(field);
    validate_twist(u);
    if (alpha_max < 0) throw std::invalid_argument("splitting_search: alpha_max must be >= 0");
    const std::uint64_t q = field_order(field);
    const bool canonical_twist = (u == default_twist(field));

    SearchResult result(field);
    result.alpha_max = alpha_max;
    result.u = u;
    result.certified = true;
    result.consistent = true;

    auto evaluate = [&](const SplitCandidate& cand) {
        SumHomE defect = square_defect(u, cand, probe_element(field, cand.alpha));
        CandidateOutcome out(cand, defect.second);
        out.defect_hom_zero = defect.first.stored_zero();
        out.rejected = !defect.second.is_zero() || !out.defect_hom_zero;
        if (canonical_twist) {
            out.consistent =
                out.defect_hom_zero && (obstruction(cand, field) == defect.second);
        }
        if (!out.rejected) {
            result.certified = false;
            if (!result.witness) result.witness = result.candidates.size();
        }
        result.consistent = result.consistent && out.consistent;
        result.candidates.push_back(std::move(out));
    };

    evaluate(SplitCandidate{0, Poly::zero(field)});
    for (std::int64_t alpha = 0; alpha <= alpha_max; ++alpha) {
        // t = sum a_j x^(alpha-j) y^j with a_alpha != 0, enumerated by a
        // base-q counter (a_alpha - 1 varies fastest)
        std::uint64_t rest_count = 1;
        for (std::int64_t j = 0; j < alpha; ++j) rest_count *= q;
        for (std::uint64_t code = 0; code < rest_count * (q - 1); ++code) {
            Poly t(field);
            std::uint64_t lead = 1 + code % (q - 1);
            std::uint64_t rest = code / (q - 1);
            t.add_term({0, alpha}, Fq(field, lead));
            for (std::int64_t j = 0; j < alpha; ++j) {
                t.add_term({alpha - j, j}, Fq(field, rest % q));
                rest /= q;
            }
            evaluate(SplitCandidate{alpha, t});
        }
    }
    return result;
}

namespace {

TraceStage stage_of(std::string name, const std::string& expected, const std::string& computed) {
    return TraceStage{std::move(name), expected, computed, expected == computed};
}

template <class T>
TraceStage stage_eq(std::string name, const T& expected, const T& computed) {
    TraceStage s{std::move(name), module_to_string(expected), module_to_string(computed),
                 expected == computed};
    return s;
}

std::string eelt_str(const EElt& e) { return e.to_string(); }

} // namespace

WalkthroughResult walkthrough(FieldId field, std::int64_t alpha, const Poly& t) {
    const std::int64_t p = field.p;
    SplitCandidate cand{alpha, t};
    validate_candidate(cand);
    const std::int64_t ap2 = checked_add(checked_mul(alpha, p), 2);
    const RxElt u = default_twist(field);
    const HomRxE phi = probe_hom(field, alpha);
    const SumHomE test = probe_element(field, alpha);
    const Fq one = Fq::one(field);
    const Poly onep = Poly::constant(one);

    WalkthroughResult out;
    auto push = [&](TraceStage s) { out.stages.push_back(std::move(s)); };

    // the candidate image g(phi, 1/(x y^(alpha p+2)))
    SumHomE g_image = apply_candidate(cand, test);
    EElt t_frac = cand.is_identity() ? EElt::zero(field)
                                     : e_from_fraction(t, alpha + 1, ap2);
    SumHomE g_expect(phi, test.second + t_frac);
    push(stage_eq<SumHomE>("g_image", g_expect, g_image));

    // psi = phi' o theta_N^{-1} on the two generator families
    HomFRxE psi1 = precompose_theta_rx_inv(g_image.first);
    for (std::int64_t n = 0; n <= 3; ++n) {
        EElt got = homf_eval(psi1, onep, RxElt::inv_x(field, n));
        EElt want = EElt::term(one, checked_add(checked_mul(p, n), 1), ap2);
        push(stage_eq<EElt>("psi_rx_level_" + std::to_string(n), want, got));
    }
    EElt psi2 = g_image.second - hom_apply(g_image.first, u);
    {
        EElt want = -e_from_fraction(onep, 2, ap2 - 1) + test.second + t_frac;
        push(stage_eq<EElt>("psi_r_value", want, psi2));
    }

    // the split components (psi_1, psi_2)
    {
        std::vector<Fq> c(static_cast<std::size_t>((alpha + 1) * p - 1) + 1, Fq::zero(field));
        c.back() = one;
        HomFRxE psi1_expect(field, phi.deg(), std::move(c), kUnbounded);
        push(stage_eq<HomFRxE>("psi1", psi1_expect, psi1));
    }
    push(stage_of("psi2", eelt_str(-e_from_fraction(onep, 2, ap2 - 1) + test.second + t_frac),
                  eelt_str(psi2)));

    // image in F(Hom) (+) F(E)
    Tensor<HomRxE> fhom = hom_split(psi1);
    {
        Poly front = Poly::monomial(field, 1, ap2).pow(static_cast<std::uint64_t>(p - 1));
        Tensor<HomRxE> want = tensor_normalize(front, phi);
        push(stage_eq<Tensor<HomRxE>>("f_pair_hom", want, fhom));
    }
    Tensor<EElt> fe = homfr_to_fe(psi2);
    {
        Poly m2 = Poly::monomial(field, 2, ap2 - 1).pow(static_cast<std::uint64_t>(p - 1));
        Poly m1 = Poly::monomial(field, 1, ap2).pow(static_cast<std::uint64_t>(p - 1));
        Tensor<EElt> want = -tensor_normalize(m2, EElt::term(one, 2, ap2 - 1)) +
                            tensor_normalize(m1, EElt::term(one, 1, ap2));
        if (!cand.is_identity()) {
            Poly mt = Poly::monomial(field, alpha + 1, ap2).pow(static_cast<std::uint64_t>(p - 1)) * t;
            want = want + tensor_normalize(mt, EElt::term(one, alpha + 1, ap2));
        }
        push(stage_eq<Tensor<EElt>>("f_pair_e", want, fe));
    }

    // display (1): theta_L of the candidate image
    Tensor<SumHomE> eq1 = theta_ext(u, g_image);
    {
        Poly m1 = Poly::monomial(field, 1, ap2).pow(static_cast<std::uint64_t>(p - 1));
        Poly m2 = Poly::monomial(field, 2, ap2 - 1).pow(static_cast<std::uint64_t>(p - 1));
        Tensor<SumHomE> want =
            tensor_normalize(m1, SumHomE(phi, EElt::term(one, 1, ap2))) -
            tensor_normalize(m2, SumHomE(HomRxE::zero(field), EElt::term(one, 2, ap2 - 1)));
        if (!cand.is_identity()) {
            Poly mt = Poly::monomial(field, alpha + 1, ap2).pow(static_cast<std::uint64_t>(p - 1)) * t;
            want = want + tensor_normalize(
                              mt, SumHomE(HomRxE::zero(field), EElt::term(one, alpha + 1, ap2)));
        }
        push(stage_eq<Tensor<SumHomE>>("eq1", want, eq1));
    }

    // display (2): (id (x) g) of the split structure image
    Tensor<SumHomE> base = theta_split(test);
    Tensor<SumHomE> eq2(field);
    for (const auto& [key, m] : base.terms()) eq2.add_reduced_term(key, apply_candidate(cand, m));
    {
        Poly m1 = Poly::monomial(field, 1, ap2).pow(static_cast<std::uint64_t>(p - 1));
        Tensor<SumHomE> want =
            tensor_normalize(m1, SumHomE(phi, EElt::zero(field))) +
            tensor_normalize(m1, SumHomE(HomRxE::zero(field), EElt::term(one, 1, ap2)));
        if (!cand.is_identity())
            want = want + tensor_normalize(m1, SumHomE(HomRxE::zero(field), t_frac));
        push(stage_eq<Tensor<SumHomE>>("eq2", want, eq2));
    }

    // both theta^{-1} images
    SumHomE inv1 = theta_split_inv(eq1);
    {
        SumHomE want(phi, test.second - e_from_fraction(onep, 2, ap2 - 1) + t_frac);
        push(stage_eq<SumHomE>("theta_inv_eq1", want, inv1));
    }
    SumHomE inv2 = theta_split_inv(eq2);
    {
        EElt tp_frac = cand.is_identity()
                           ? EElt::zero(field)
                           : e_from_fraction(frobenius_power(t),
                                             checked_add(checked_mul(alpha, p), 1), ap2);
        SumHomE want(phi, test.second + tp_frac);
        push(stage_eq<SumHomE>("theta_inv_eq2", want, inv2));
    }

    // the defect equals the closed-form obstruction
    {
        SumHomE defect = square_defect(u, cand, test);
        SumHomE want(HomRxE::zero(field), obstruction(cand, field));
        push(stage_eq<SumHomE>("defect_vs_obstruction", want, defect));
    }

    out.ok = true;
    for (const TraceStage& s : out.stages) out.ok = out.ok && s.ok;
    return out;
}

} // namespace gfm
