#pragma once

#include "sps/algebra.hpp"
#include "sps/lattice.hpp"

namespace sps {

/// A normalized positive linear functional, held as its Riesz vector under
/// the reference inner product.
struct StateFunctional {
    Element riesz;

    double operator()(const Element& a) const { return reference_inner(riesz, a); }
};

/// Normalized trace, the strictly positive separating state used to seed
/// the pure-state construction.
StateFunctional trace_state(const AlgebraDescriptor& desc);

/// The unique pure state with omega_p(p) = 1, built as
/// omega_p(a) = omega(p & a) / omega(p) from the normalized trace.
StateFunctional pure_state_of(const SharpEffect& p, const Tolerances& tol = {});

/// omega_p(q), symmetric in p and q; zero exactly when p and q are
/// orthogonal.
double transition_probability(const SharpEffect& p, const SharpEffect& q,
                              const Tolerances& tol = {});

/// The self-dual bilinear form <p,q> = omega_p(q) extended linearly along
/// atomic spectral decompositions, held as its Gram matrix on the
/// coordinate basis.
struct SelfDualForm {
    AlgebraDescriptor descriptor;
    Eigen::MatrixXd gram;

    double eval(const Element& a, const Element& b) const {
        return a.coords().dot(gram * b.coords());
    }
};

SelfDualForm build_self_dual_inner(const AlgebraDescriptor& desc,
                                   std::uint64_t frame_seed = 0,
                                   const Tolerances& tol = {});

/// <a, b> for one concrete pair via the atomic decomposition of a; used to
/// cross-check the Gram construction frame by frame.
double self_dual_pairing(const Element& a, const Element& b, Rng& frame_rng,
                         const Tolerances& tol = {});

}  // namespace sps
