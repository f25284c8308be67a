#include "sps/reconstruct.hpp"
#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"

namespace sps {

namespace {

Element atom_jordan_raw(const Element& p, const Element& b, const Tolerances& tol) {
    Element pperp = Element::unit(p.descriptor()) - p;
    return 0.5 * (b + seq_prod(p, b, tol) - seq_prod(pperp, b, tol));
}

}  // namespace

Element atom_jordan(const SharpEffect& p, const Element& b, const Tolerances& tol) {
    if (!p.is_atom(tol)) throw Error("atom_jordan requires an atomic effect");
    return atom_jordan_raw(p.value(), b, tol);
}

Element reconstructed_mul(const Element& a, const Element& b, const Tolerances& tol,
                          std::uint64_t frame_seed) {
    require_same_descriptor(a, b);
    Rng rng = substream(frame_seed, 0x4A0);
    Element out = Element::zero(a.descriptor());
    for (const auto& t : spectral_decompose(a, tol).terms)
        for (const auto& atom : split_idempotent(t.idempotent, rng, tol))
            out += t.lambda * atom_jordan_raw(atom, b, tol);
    return out;
}

Eigen::MatrixXd t_operator(const Element& a, const Tolerances& tol,
                           std::uint64_t frame_seed) {
    const auto& desc = a.descriptor();
    const int dim = desc.dimension();
    Rng rng = substream(frame_seed, 0x4A1);
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
    Element unit = Element::unit(desc);
    for (const auto& t : spectral_decompose(a, tol).terms) {
        for (const auto& atom : split_idempotent(t.idempotent, rng, tol)) {
            Eigen::MatrixXd lp = left_mult_map(atom, tol).action;
            Eigen::MatrixXd lpperp = left_mult_map(unit - atom, tol).action;
            op += t.lambda * 0.5 * (id + lp - lpperp);
        }
    }
    return op;
}

double operator_norm(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
}

TCommutationReport verify_t_commutation(const Element& a, const Element& b,
                                        const Tolerances& tol) {
    Eigen::MatrixXd ta = t_operator(a, tol);
    Eigen::MatrixXd tb = t_operator(b, tol);
    double norm = operator_norm(ta * tb - tb * ta);
    bool compat = is_effect(a, tol) && is_effect(b, tol) && is_compatible(a, b, tol);
    return {norm, compat};
}

}  // namespace sps
