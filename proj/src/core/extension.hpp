#ifndef GFM_CORE_EXTENSION_HPP
#define GFM_CORE_EXTENSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hom.hpp"

namespace gfm {

/// Elements of L: the module *Hom(R_x, E) (+) E underlying both the split
/// extension and the twisted one.
using SumHomE = Sum<HomRxE, EElt>;

inline std::optional<DegreeInfo> module_degree(const SumHomE& m) {
    auto da = module_degree(m.first);
    auto db = module_degree(m.second);
    if (!da) return db;
    if (!db) return da;
    if (da->degree == db->degree)
        return DegreeInfo{da->degree, da->homogeneous && db->homogeneous};
    return DegreeInfo{std::max(da->degree, db->degree), false};
}

/// The probe map of degree -alpha p - 3 sending 1/x^n to
/// 1/(x^(n+1) y^(alpha p + 2)); exact (unbounded window).
HomRxE probe_hom(FieldId field, std::int64_t alpha);

/// The probe element (probe_hom, 1/(x y^(alpha p + 2))) the defect is
/// evaluated on.
SumHomE probe_element(FieldId field, std::int64_t alpha);

/// The twist y/x defining the non-split extension.
RxElt default_twist(FieldId field);

/// The split structure map on *Hom(R_x, E) (+) E: theta_dual (+) theta_E.
Tensor<SumHomE> theta_split(const SumHomE& elt);
SumHomE theta_split_inv(const Tensor<SumHomE>& t);

/// The structure map of L twisted by u, evaluated as the composite
///   pair hom -> precompose theta_N(u)^{-1} -> split components
///   -> (hom_split, homfr_to_fe) -> recombine,
/// so the cross term -f(u) lands in the E-side value. u = 0 recovers
/// theta_split.
Tensor<SumHomE> theta_ext(const RxElt& u, const SumHomE& elt);
SumHomE theta_ext_inv(const RxElt& u, const Tensor<SumHomE>& t);

/// A candidate degree-zero splitting: the map (f, e) -> (f, e + f(t/x^alpha))
/// with t homogeneous of degree alpha carrying a nonzero y^alpha coefficient,
/// or t = 0 for the identity.
struct SplitCandidate {
    std::int64_t alpha = 0;
    Poly t;

    SplitCandidate(std::int64_t alpha_, Poly t_) : alpha(alpha_), t(std::move(t_)) {}
    static SplitCandidate identity(FieldId field) { return {0, Poly::zero(field)}; }

    bool is_identity() const { return t.is_zero(); }
    std::string to_string() const;
};

/// Throws unless the candidate satisfies the shape above.
void validate_candidate(const SplitCandidate& c);

SumHomE apply_candidate(const SplitCandidate& c, const SumHomE& elt);

/// Commutativity defect of the candidate square on one element: pull
/// theta_ext(u) . g and (id (x) g) . theta_split back through
/// theta_split^{-1} and subtract. Zero iff the square commutes there.
SumHomE square_defect(const RxElt& u, const SplitCandidate& c, const SumHomE& test);

/// Closed form of the defect on probe_element(alpha) for the twist y/x:
///   -1/(x^2 y^(alpha p+1)) + t/(x^(alpha+1) y^(alpha p+2))
///                          - t^p/(x^(alpha p+1) y^(alpha p+2)).
/// Nonzero for every admissible candidate: its first fraction is the only
/// contribution on the y-degree-(alpha p+1) diagonal.
EElt obstruction(const SplitCandidate& c, FieldId field);

struct CandidateOutcome {
    explicit CandidateOutcome(SplitCandidate c, EElt defect)
        : candidate(std::move(c)), defect_e(std::move(defect)) {}

    SplitCandidate candidate;
    EElt defect_e;          // E component of the square defect
    bool defect_hom_zero = false;
    bool rejected = false;  // defect nonzero: candidate cannot split
    bool consistent = true; // closed form agrees with the full pipeline
};

struct SearchResult {
    explicit SearchResult(FieldId f) : field(f), u(RxElt::zero(f)) {}

    FieldId field;
    std::int64_t alpha_max = 0;
    RxElt u;
    std::vector<CandidateOutcome> candidates;
    bool certified = false;        // every candidate rejected
    bool consistent = false;       // closed form matched everywhere it applies
    std::optional<std::size_t> witness; // index of a zero-defect candidate
};

/// Enumerates t = 0 plus all homogeneous t of degree alpha <= alpha_max over
/// GF(p^e) with nonzero y^alpha coefficient, in a fixed deterministic order,
/// and evaluates the square defect of each candidate on its probe element.
SearchResult splitting_search(FieldId field, std::int64_t alpha_max, const RxElt& u);

struct TraceStage {
    std::string name;
    std::string expected;
    std::string computed;
    bool ok = false;
};

struct WalkthroughResult {
    std::vector<TraceStage> stages;
    bool ok = false;
};

/// Replays the whole defect computation for one candidate on its probe
/// element, asserting every intermediate against its closed form. A failing
/// stage names itself.
WalkthroughResult walkthrough(FieldId field, std::int64_t alpha, const Poly& t);

} // namespace gfm

#endif
