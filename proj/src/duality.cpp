#include "sps/duality.hpp"
#include "sps/seqprod.hpp"

namespace sps {

StateFunctional trace_state(const AlgebraDescriptor& desc) {
    Element u = Element::unit(desc);
    double norm = reference_inner(u, u);
    return {u * (1.0 / norm)};
}

StateFunctional pure_state_of(const SharpEffect& p, const Tolerances& tol) {
    if (!p.is_atom(tol)) throw Error("pure_state_of requires an atomic effect");
    const auto& desc = p.descriptor();
    Element u = Element::unit(desc);
    double omega_p = reference_inner(u, p.value());  // unnormalized trace of p
    LeftMultMap lp = left_mult_map(p.value(), tol);
    Eigen::VectorXd riesz = lp.action.transpose() * u.coords() / omega_p;
    return {Element::from_coords(desc, riesz)};
}

double transition_probability(const SharpEffect& p, const SharpEffect& q,
                              const Tolerances& tol) {
    require_same_descriptor(p.value(), q.value());
    if (!p.is_atom(tol) || !q.is_atom(tol))
        throw Error("transition_probability requires atomic effects");
    return pure_state_of(p, tol)(q.value());
}

double self_dual_pairing(const Element& a, const Element& b, Rng& frame_rng,
                         const Tolerances& tol) {
    require_same_descriptor(a, b);
    double total = 0.0;
    for (const auto& t : spectral_decompose(a, tol).terms) {
        for (const auto& atom : split_idempotent(t.idempotent, frame_rng, tol)) {
            StateFunctional omega = pure_state_of(SharpEffect(atom, tol), tol);
            total += t.lambda * omega(b);
        }
    }
    return total;
}

SelfDualForm build_self_dual_inner(const AlgebraDescriptor& desc,
                                   std::uint64_t frame_seed, const Tolerances& tol) {
    const int dim = desc.dimension();
    Eigen::MatrixXd gram(dim, dim);
    for (int i = 0; i < dim; ++i) {
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(dim);
        ei[i] = 1.0;
        Element basis = Element::from_coords(desc, ei);
        // Riesz vector of b -> <e_i, b>: sum of lambda-weighted pure-state
        // vectors over an atomic frame of e_i.
        Rng rng = substream(frame_seed, static_cast<std::uint64_t>(i));
        Eigen::VectorXd row = Eigen::VectorXd::Zero(dim);
        for (const auto& t : spectral_decompose(basis, tol).terms)
            for (const auto& atom : split_idempotent(t.idempotent, rng, tol))
                row += t.lambda * pure_state_of(SharpEffect(atom, tol), tol).riesz.coords();
        gram.row(i) = row;
    }
    return {desc, std::move(gram)};
}

}  // namespace sps
