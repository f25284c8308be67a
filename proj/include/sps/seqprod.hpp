#pragma once

#include "sps/algebra.hpp"

namespace sps {

/// Sequential product a & b. Matrix blocks compute sqrt(a) b sqrt(a)
/// directly; spin blocks use the equivalent quadratic Jordan action
/// 2 s(s b) - (s s) b with s = sqrt(a). The first argument must be
/// positive; the second may be any element.
Element seq_prod(const Element& a, const Element& b, const Tolerances& tol = {});

/// a | b, i.e. a & b == b & a within tolerance. Both must be effects.
bool is_compatible(const Element& a, const Element& b, const Tolerances& tol = {});

/// The linear action b -> a & b on coordinate space.
struct LeftMultMap {
    Element base;
    Eigen::MatrixXd action;

    Element apply(const Element& x) const {
        return Element::from_coords(base.descriptor(), action * x.coords());
    }
};

LeftMultMap left_mult_map(const Element& a, const Tolerances& tol = {});

/// Order isomorphism of the interior cone mapping a to b: L_b after
/// L_{a^{-1}}, with the inverse composed from the factor maps.
struct HomogeneityIso {
    AlgebraDescriptor descriptor;
    Eigen::MatrixXd forward;
    Eigen::MatrixXd backward;

    Element apply(const Element& x) const {
        return Element::from_coords(descriptor, forward * x.coords());
    }
    Element apply_inverse(const Element& x) const {
        return Element::from_coords(descriptor, backward * x.coords());
    }
};

HomogeneityIso homogeneity_iso(const Element& a, const Element& b,
                               const Tolerances& tol = {});

}  // namespace sps
