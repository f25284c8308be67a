#pragma once

#include "sps/algebra.hpp"
#include "sps/lattice.hpp"

namespace sps {

/// p * b = (b + L_p b - L_{p'} b) / 2 for an atom p.
Element atom_jordan(const SharpEffect& p, const Element& b, const Tolerances& tol = {});

/// The Jordan product rebuilt from the sequential product: decompose a into
/// a lambda-weighted atomic frame (seeded) and sum the atomic products.
Element reconstructed_mul(const Element& a, const Element& b,
                          const Tolerances& tol = {}, std::uint64_t frame_seed = 0);

/// Matrix of b -> a * b in coordinates.
Eigen::MatrixXd t_operator(const Element& a, const Tolerances& tol = {},
                           std::uint64_t frame_seed = 0);

struct TCommutationReport {
    double commutator_norm;  // spectral norm of T_a T_b - T_b T_a
    bool compatible;
};

TCommutationReport verify_t_commutation(const Element& a, const Element& b,
                                        const Tolerances& tol = {});

/// Spectral-norm of a matrix (largest singular value).
double operator_norm(const Eigen::MatrixXd& m);

}  // namespace sps
