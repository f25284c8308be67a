#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"

namespace sps {

Element seq_prod(const Element& a, const Element& b, const Tolerances& tol) {
    require_same_descriptor(a, b);
    if (!is_positive(a, tol)) throw Error("seq_prod requires a positive first argument");
    Element s = sqrt_effect(a, tol);
    Element r = Element::zero(a.descriptor());
    for (size_t bi = 0; bi < r.blocks().size(); ++bi) {
        if (std::holds_alternative<SpinBlock>(r.blocks()[bi])) continue;
        const auto& sm = std::get<Eigen::MatrixXcd>(s.blocks()[bi]);
        const auto& bm = std::get<Eigen::MatrixXcd>(b.blocks()[bi]);
        r.blocks()[bi] = Eigen::MatrixXcd(sm * bm * sm);
    }
    bool has_spin = false;
    for (const auto& f : a.descriptor().factors)
        if (f.kind == FactorKind::SpinFactor) has_spin = true;
    if (has_spin) {
        // Quadratic action 2 s(s b) - (s s) b, applied blockwise; only the
        // spin blocks of the result are taken from it.
        Element q = 2.0 * jordan_mul(s, jordan_mul(s, b)) - jordan_mul(jordan_mul(s, s), b);
        for (size_t bi = 0; bi < r.blocks().size(); ++bi)
            if (std::holds_alternative<SpinBlock>(r.blocks()[bi]))
                r.blocks()[bi] = q.blocks()[bi];
    }
    return r;
}

bool is_compatible(const Element& a, const Element& b, const Tolerances& tol) {
    if (!is_effect(a, tol) || !is_effect(b, tol))
        throw Error("is_compatible requires two effects");
    Element d = seq_prod(a, b, tol) - seq_prod(b, a, tol);
    return order_unit_norm(d) <= eps_for(tol, a.descriptor(),
                                         order_unit_norm(a) * order_unit_norm(b));
}

LeftMultMap left_mult_map(const Element& a, const Tolerances& tol) {
    if (!is_positive(a, tol)) throw Error("left_mult_map requires a positive element");
    const auto& desc = a.descriptor();
    const int dim = desc.dimension();
    Element s = sqrt_effect(a, tol);
    Eigen::MatrixXd action(dim, dim);
    Element ss = jordan_mul(s, s);
    for (int j = 0; j < dim; ++j) {
        Eigen::VectorXd ej = Eigen::VectorXd::Zero(dim);
        ej[j] = 1.0;
        Element basis = Element::from_coords(desc, ej);
        Element img = 2.0 * jordan_mul(s, jordan_mul(s, basis)) - jordan_mul(ss, basis);
        action.col(j) = img.coords();
    }
    return {a, std::move(action)};
}

HomogeneityIso homogeneity_iso(const Element& a, const Element& b, const Tolerances& tol) {
    require_same_descriptor(a, b);
    if (min_eigenvalue(a) <= tol.zero_cutoff || min_eigenvalue(b) <= tol.zero_cutoff)
        throw Error("homogeneity_iso requires strictly positive arguments");
    LeftMultMap la_inv = left_mult_map(inverse(a, tol), tol);
    LeftMultMap lb = left_mult_map(b, tol);
    LeftMultMap la = left_mult_map(a, tol);
    LeftMultMap lb_inv = left_mult_map(inverse(b, tol), tol);
    return {a.descriptor(), lb.action * la_inv.action, la.action * lb_inv.action};
}

}  // namespace sps
