#ifndef GFM_CORE_FROBENIUS_HPP
#define GFM_CORE_FROBENIUS_HPP

#include "modules.hpp"
#include "tensor.hpp"

namespace gfm {

// Structure maps theta_M : M -> F(M) (and inverses) for the three base
// modules and for the twisted direct sum R_x (+) R. All are degree preserving
// for the grading deg(r (x) m) = deg r + p deg m, and each pair composes to
// the identity; the unit tests certify both claims.

/// theta_R: r -> r (x) 1 in normal form.
Tensor<Poly> theta_r(const Poly& r);
/// theta_R^{-1}: r (x) s -> r * s^p.
Poly theta_r_inv(const Tensor<Poly>& t);

/// theta_{R_x}: s/x^n -> s x^(n(p-1)) (x) 1/x^n in normal form.
Tensor<RxElt> theta_rx(const RxElt& m);
/// theta_{R_x}^{-1}: r (x) s/x^n -> r s^p / x^(pn).
RxElt theta_rx_inv(const Tensor<RxElt>& t);

/// theta_E: sum c/(x^a y^b) -> sum c (x^a y^b)^(p-1) (x) 1/(x^a y^b).
Tensor<EElt> theta_e(const EElt& e);
/// theta_E^{-1}: r (x) e -> r * e^[p] (coefficientwise p-th power on e).
EElt theta_e_inv(const Tensor<EElt>& t);

using SumRxR = Sum<RxElt, Poly>;

/// Throws unless u is zero or homogeneous of degree 0 (i.e. u = t/x^alpha
/// with t homogeneous of degree alpha in lowest terms).
void validate_twist(const RxElt& u);

/// theta_N for N = R_x (+) R twisted by u: (m, r) -> theta_{R_x}(m + r u)
/// in the first slot plus theta_R(r) in the second, as one tensor over the
/// sum. u = 0 gives the plain componentwise structure.
Tensor<SumRxR> theta_n(const RxElt& u, const SumRxR& elt);

/// Inverse: split the tensor, pull back componentwise, and undo the twist:
/// (a, b) -> (a - b u, b). The sign is forced by the composition identity.
SumRxR theta_n_inv(const RxElt& u, const Tensor<SumRxR>& t);

} // namespace gfm

#endif
