#pragma once

#include "sps/algebra.hpp"
#include "sps/spectral.hpp"

namespace sps {

/// A certified sharp effect. Construction re-checks sharpness and refuses
/// uncertified values.
class SharpEffect {
  public:
    explicit SharpEffect(Element value, const Tolerances& tol = {});

    const Element& value() const { return value_; }
    const SpectralForm& form() const { return form_; }
    const AlgebraDescriptor& descriptor() const { return value_.descriptor(); }

    SharpEffect complement(const Tolerances& tol = {}) const;
    bool is_atom(const Tolerances& tol = {}) const;

  private:
    Element value_;
    SpectralForm form_;
};

/// p v q = ceil((p + q)/2).
SharpEffect join(const SharpEffect& p, const SharpEffect& q, const Tolerances& tol = {});
/// p ^ q = (p' v q')'.
SharpEffect meet(const SharpEffect& p, const SharpEffect& q, const Tolerances& tol = {});

bool orthogonal(const SharpEffect& p, const SharpEffect& q, const Tolerances& tol = {});

struct AtomicDecomposition {
    SharpEffect target;
    std::vector<Element> atoms;  // mutually orthogonal, summing to target
};

AtomicDecomposition atomic_decomposition(const SharpEffect& p, Rng& rng,
                                         const Tolerances& tol = {});
AtomicDecomposition atomic_decomposition(const SharpEffect& p,
                                         std::uint64_t frame_seed = 0,
                                         const Tolerances& tol = {});

/// Common length of every atomic decomposition of p.
int rank_of(const SharpEffect& p, const Tolerances& tol = {});

struct CoveringResult {
    enum class Kind { Zero, Atom } kind;
    Element witness;  // (q v p) - p
};

/// Covering property: for an atom q, (q v p) - p is zero or atomic.
/// Also checks ceil(p' & q) against the witness.
CoveringResult covering_check(const SharpEffect& p, const SharpEffect& q_atom,
                              const Tolerances& tol = {});

}  // namespace sps
