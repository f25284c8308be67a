#pragma once

#include "sps/algebra.hpp"

#include <functional>

namespace sps {

struct SpectralTerm {
    double lambda;
    Element idempotent;
};

/// a = sum_i lambda_i p_i with mutually orthogonal sharp idempotents and
/// eigenvalues clustered to at least eig_cluster_gap separation.
struct SpectralForm {
    AlgebraDescriptor descriptor;
    std::vector<SpectralTerm> terms;  // sorted by ascending eigenvalue

    Element reconstruct() const;
    /// sum_i f(lambda_i) p_i over the kept terms.
    Element map_eigenvalues(const std::function<double(double)>& f) const;
    /// Jordan rank of the support, i.e. sum of idempotent ranks.
    int support_rank() const;
};

SpectralForm spectral_decompose(const Element& a, const Tolerances& tol = {},
                                bool keep_zero = false);

Element sqrt_effect(const Element& a, const Tolerances& tol = {});
Element power(const Element& a, int n, const Tolerances& tol = {});
Element inverse(const Element& a, const Tolerances& tol = {});

bool is_sharp(const Element& a, const Tolerances& tol = {});
bool is_atomic(const Element& a, const Tolerances& tol = {});

/// Jordan rank of an idempotent (trace in the reference form).
int idempotent_rank(const Element& p);

Element ceiling(const Element& a, const Tolerances& tol = {});
Element floor_sharp(const Element& a, const Tolerances& tol = {});

/// Splits every spectral idempotent of a full frame into rank-1 pieces.
/// Returns rank(desc) atoms summing to the unit; the secondary frames
/// inside degenerate eigenspaces are drawn from rng.
std::vector<Element> atomic_frame(const Element& a, Rng& rng,
                                  const Tolerances& tol = {});

/// Rank-1 split of a single sharp idempotent (length = its Jordan rank).
std::vector<Element> split_idempotent(const Element& p, Rng& rng,
                                      const Tolerances& tol = {});

struct ClassicalAlgebraReport {
    int dim;             // distinct spectral clusters of a, zero included
    int gram_rank;       // numeric rank of the power Gram matrix
    double max_commutator;
    double max_associator;
    int samples;
};

/// Numeric probe that the span of the powers of a and its complement is
/// closed under the sequential product with & commutative and associative
/// on it.
ClassicalAlgebraReport classical_algebra_check(const Element& a,
                                               int max_power = -1,
                                               const Tolerances& tol = {});

}  // namespace sps
