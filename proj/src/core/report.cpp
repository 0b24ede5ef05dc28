#include "report.hpp"

#include <chrono>
#include <sstream>

#include "rng.hpp"

namespace gfm {

using nlohmann::json;

namespace {

class Stopwatch {
  public:
    std::int64_t ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Accumulates trial outcomes for one aggregate check.
struct Tally {
    std::uint64_t runs = 0;
    std::uint64_t failures = 0;
    std::string first_witness;

    void record(bool ok, const std::string& witness) {
        ++runs;
        if (!ok && failures++ == 0) first_witness = witness;
    }

    void flush(Report& report, const std::string& name) const {
        std::string note = failures == 0
                               ? std::to_string(runs) + " trials"
                               : std::to_string(failures) + "/" + std::to_string(runs) +
                                     " failures; first: " + first_witness;
        report.add_check(name, failures == 0, note);
    }
};

} // namespace

void Report::set_param(const std::string& key, json value) { parameters_[key] = std::move(value); }

void Report::add_check(const std::string& name, bool pass, const std::string& witness) {
    checks_.push_back(Check{name, pass, witness});
}

bool Report::passed() const {
    for (const Check& c : checks_)
        if (!c.pass) return false;
    return true;
}

json Report::to_json() const {
    json out;
    out["command"] = command_;
    out["parameters"] = parameters_;
    json checks = json::array();
    for (const Check& c : checks_) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    if (!warnings_.empty()) out["warnings"] = warnings_;
    if (!detail_.is_null()) out["detail"] = detail_;
    out["status"] = passed() ? "pass" : "fail";
    out["elapsed_ms"] = elapsed_ms_;
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command_ << "\n";
    os << "parameters:";
    for (auto it = parameters_.begin(); it != parameters_.end(); ++it)
        os << " " << it.key() << "=" << it.value().dump();
    os << "\n";
    for (const Check& c : checks_) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.witness.empty()) os << " -- " << c.witness;
        os << "\n";
    }
    for (const std::string& w : warnings_) os << "warning: " << w << "\n";
    os << "status: " << (passed() ? "pass" : "fail") << " (" << elapsed_ms_ << " ms)\n";
    return os.str();
}

Report run_theorem(FieldId field, std::int64_t alpha_max) {
    Stopwatch timer;
    validate_field(field);
    Report report("theorem");
    report.set_param("p", field.p);
    report.set_param("e", field.e);
    report.set_param("alpha_max", alpha_max);

    SearchResult sr = splitting_search(field, alpha_max, default_twist(field));
    std::string witness = std::to_string(sr.candidates.size()) + " candidates";
    if (sr.witness)
        witness = "zero defect for " + sr.candidates[*sr.witness].candidate.to_string();
    report.add_check("splitting_search: every candidate has nonzero defect", sr.certified,
                     witness);
    report.add_check("closed-form obstruction matches the six-map pipeline", sr.consistent);

    json cands = json::array();
    for (const CandidateOutcome& oc : sr.candidates) {
        json jc;
        jc["alpha"] = oc.candidate.alpha;
        jc["t"] = oc.candidate.t.to_string();
        jc["defect"] = oc.defect_e.to_string();
        jc["rejected"] = oc.rejected;
        jc["consistent"] = oc.consistent;
        cands.push_back(std::move(jc));
    }
    json detail;
    detail["candidate_count"] = sr.candidates.size();
    detail["twist"] = sr.u.to_string();
    detail["candidates"] = std::move(cands);

    for (std::int64_t a : {std::int64_t(0), std::int64_t(1)}) {
        WalkthroughResult w = walkthrough(field, a, Poly::monomial(field, 0, a));
        std::string bad;
        for (const TraceStage& s : w.stages)
            if (!s.ok && bad.empty()) bad = s.name;
        report.add_check("walkthrough alpha=" + std::to_string(a) + " t=y^" + std::to_string(a),
                         w.ok, w.ok ? std::to_string(w.stages.size()) + " stages" : bad);
    }
    report.set_detail(std::move(detail));
    report.set_elapsed_ms(timer.ms());
    return report;
}

Report run_roundtrip(FieldId field, std::int64_t degree, std::int64_t precision,
                     std::uint64_t trials, std::uint64_t seed) {
    Stopwatch timer;
    validate_field(field);
    if (precision < 1) throw std::invalid_argument("roundtrip: precision must be >= 1");
    Report report("roundtrip");
    report.set_param("p", field.p);
    report.set_param("e", field.e);
    report.set_param("degree", degree);
    report.set_param("precision", precision);
    report.set_param("trials", trials);
    report.set_param("seed", seed);

    Rng rng(seed);
    const RxElt u = default_twist(field);
    Tally split_merge, merge_split, degree_kept, t_r, t_rx, t_e, t_n, t_dual, t_ext;

    for (std::uint64_t i = 0; i < trials; ++i) {
        HomFRxE h = random_homf(rng, field, degree, precision);
        Tensor<HomRxE> split = hom_split(h);
        HomFRxE back = hom_merge(split);
        split_merge.record(back == h, h.to_string());
        bool deg_ok = true;
        if (!h.stored_zero() && !split.is_zero()) {
            auto dt = split.degree();
            deg_ok = dt && dt->homogeneous && dt->degree == h.deg();
        }

        Tensor<HomRxE> t = random_hom_tensor(rng, field, degree, precision);
        HomFRxE merged = hom_merge(t);
        Tensor<HomRxE> expanded = hom_split(merged);
        merge_split.record(expanded == t, t.to_string());
        if (!merged.stored_zero()) deg_ok = deg_ok && merged.deg() == degree;
        degree_kept.record(deg_ok, h.to_string());

        Poly r = random_poly(rng, field, 4, 5);
        t_r.record(theta_r_inv(theta_r(r)) == r, r.to_string());

        RxElt m = random_homogeneous_rx(rng, field, rng.range(-4, 4));
        t_rx.record(theta_rx_inv(theta_rx(m)) == m, m.to_string());

        EElt e = random_eelt(rng, field, 4, 6);
        t_e.record(theta_e_inv(theta_e(e)) == e, e.to_string());

        SumRxR nr(random_homogeneous_rx(rng, field, rng.range(-3, 3)),
                  random_poly(rng, field, 3, 4));
        t_n.record(theta_n_inv(u, theta_n(u, nr)) == nr, nr.to_string());

        HomRxE f = random_hom(rng, field, degree, precision);
        t_dual.record(theta_dual_inv(theta_dual(f)) == f, f.to_string());

        SumHomE le = random_sum_hom_e(rng, field, degree, precision);
        t_ext.record(theta_ext_inv(u, theta_ext(u, le)) == le, le.to_string());
    }

    split_merge.flush(report, "hom_merge(hom_split(h)) = h");
    merge_split.flush(report, "hom_split(hom_merge(t)) = t");
    degree_kept.flush(report, "hom_split and hom_merge preserve degree");
    t_r.flush(report, "theta_R roundtrip");
    t_rx.flush(report, "theta_Rx roundtrip");
    t_e.flush(report, "theta_E roundtrip");
    t_n.flush(report, "theta_N roundtrip (twist y/x)");
    t_dual.flush(report, "theta on *Hom(R_x,E) roundtrip");
    t_ext.flush(report, "theta on the twisted extension roundtrip");
    if (trials == 0) report.add_warning("trials = 0: all checks are vacuous");
    report.set_elapsed_ms(timer.ms());
    return report;
}

Report run_zero_fuzz(FieldId field, std::uint64_t trials, std::uint64_t seed) {
    Stopwatch timer;
    validate_field(field);
    Report report("zero-fuzz");
    report.set_param("p", field.p);
    report.set_param("e", field.e);
    report.set_param("trials", trials);
    report.set_param("seed", seed);

    Rng rng(seed);
    Tally agree;
    for (std::uint64_t i = 0; i < trials; ++i) {
        std::int64_t A = rng.range(1, 5), B = rng.range(1, 5);
        Poly h(field);
        if (rng.chance(40)) {
            // bias towards members of (x^A, y^B) so the vanishing branch runs
            std::size_t terms = rng.below(4);
            for (std::size_t k = 0; k < terms; ++k) {
                bool via_x = rng.chance(50);
                std::int64_t a = via_x ? A + rng.range(0, 3) : rng.range(0, A - 1);
                std::int64_t b = via_x ? rng.range(0, 5) : B + rng.range(0, 3);
                h.add_term({a, b}, random_fq(rng, field));
            }
        } else {
            h = random_poly(rng, field, 4, 6);
        }
        bool nf_zero = e_from_fraction(h, A, B).is_zero();
        bool cech = cech_vanishes(h, A, B, cech_default_rmax(h, A, B));
        agree.record(nf_zero == cech,
                     "h=" + h.to_string() + " A=" + std::to_string(A) +
                         " B=" + std::to_string(B));
    }
    agree.flush(report, "normal-form vanishing agrees with the membership test");

    Poly x2 = Poly::monomial(field, 2, 0);
    Poly x1 = Poly::monomial(field, 1, 0);
    bool z1 = e_from_fraction(x2, 2, 1).is_zero() && cech_vanishes(x2, 2, 1, 5);
    bool z2 = !e_from_fraction(x1, 2, 1).is_zero() && !cech_vanishes(x1, 2, 1, 5);
    report.add_check("x^2/(x^2 y) vanishes under both tests", z1);
    report.add_check("x/(x^2 y) is nonzero under both tests", z2);
    if (trials == 0) report.add_warning("trials = 0: the fuzz check is vacuous");
    report.set_elapsed_ms(timer.ms());
    return report;
}

Report run_walkthrough(FieldId field, std::int64_t alpha, const Poly& t) {
    Stopwatch timer;
    validate_field(field);
    Report report("walkthrough");
    report.set_param("p", field.p);
    report.set_param("e", field.e);
    report.set_param("alpha", alpha);
    report.set_param("t", t.to_string());

    WalkthroughResult w = walkthrough(field, alpha, t);
    json stages = json::array();
    for (const TraceStage& s : w.stages) {
        report.add_check("stage " + s.name, s.ok, s.ok ? "" : "expected " + s.expected +
                                                              "; computed " + s.computed);
        json js;
        js["name"] = s.name;
        js["expected"] = s.expected;
        js["computed"] = s.computed;
        js["ok"] = s.ok;
        stages.push_back(std::move(js));
    }
    json detail;
    detail["stages"] = std::move(stages);
    report.set_detail(std::move(detail));
    report.set_elapsed_ms(timer.ms());
    return report;
}

} // namespace gfm
