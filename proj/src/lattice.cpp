#include "sps/lattice.hpp"
#include "sps/seqprod.hpp"

#include <cmath>

namespace sps {

SharpEffect::SharpEffect(Element value, const Tolerances& tol) : value_(std::move(value)) {
    if (!is_sharp(value_, tol)) throw Error("SharpEffect requires a sharp effect");
    form_ = spectral_decompose(value_, tol);
}

SharpEffect SharpEffect::complement(const Tolerances& tol) const {
    return SharpEffect(Element::unit(descriptor()) - value_, tol);
}

bool SharpEffect::is_atom(const Tolerances& tol) const {
    return is_atomic(value_, tol);
}

SharpEffect join(const SharpEffect& p, const SharpEffect& q, const Tolerances& tol) {
    require_same_descriptor(p.value(), q.value());
    return SharpEffect(ceiling(0.5 * (p.value() + q.value()), tol), tol);
}

SharpEffect meet(const SharpEffect& p, const SharpEffect& q, const Tolerances& tol) {
    return join(p.complement(tol), q.complement(tol), tol).complement(tol);
}

bool orthogonal(const SharpEffect& p, const SharpEffect& q, const Tolerances& tol) {
    require_same_descriptor(p.value(), q.value());
    Element pq = seq_prod(p.value(), q.value(), tol);
    return order_unit_norm(pq) <= eps_for(tol, p.descriptor(), 1.0);
}

AtomicDecomposition atomic_decomposition(const SharpEffect& p, Rng& rng,
                                         const Tolerances& tol) {
    AtomicDecomposition d{p, {}};
    for (const auto& t : p.form().terms) {
        if (t.lambda <= tol.zero_cutoff) continue;
        auto split = split_idempotent(t.idempotent, rng, tol);
        d.atoms.insert(d.atoms.end(), std::make_move_iterator(split.begin()),
                       std::make_move_iterator(split.end()));
    }
    return d;
}

AtomicDecomposition atomic_decomposition(const SharpEffect& p, std::uint64_t frame_seed,
                                         const Tolerances& tol) {
    Rng rng = substream(frame_seed, 0x5EC0);
    return atomic_decomposition(p, rng, tol);
}

int rank_of(const SharpEffect& p, const Tolerances& tol) {
    return static_cast<int>(atomic_decomposition(p, std::uint64_t{0}, tol).atoms.size());
}

CoveringResult covering_check(const SharpEffect& p, const SharpEffect& q_atom,
                              const Tolerances& tol) {
    if (!q_atom.is_atom(tol)) throw Error("covering_check requires an atomic q");
    Element witness = join(q_atom, p, tol).value() - p.value();
    double eps = eps_for(tol, p.descriptor(), 1.0);

    // ceil(p' & q) must reproduce the witness.
    Element pperp = Element::unit(p.descriptor()) - p.value();
    Element probe = seq_prod(pperp, q_atom.value(), tol);
    Element probe_ceil = order_unit_norm(probe) <= eps ? Element::zero(p.descriptor())
                                                       : ceiling(probe, tol);
    if (order_unit_norm(probe_ceil - witness) > 10.0 * eps)
        throw Error("covering witness disagrees with ceil(p' & q)");

    if (order_unit_norm(witness) <= eps)
        return {CoveringResult::Kind::Zero, std::move(witness)};
    if (!is_atomic(witness, tol))
        throw Error("covering witness is neither zero nor atomic");
    return {CoveringResult::Kind::Atom, std::move(witness)};
}

}  // namespace sps
