#pragma once

#include "sps/algebra.hpp"

#include <optional>

namespace sps {

enum class EjaFamily { RealSym, ComplexHerm, QuatHerm, SpinFactor, Albert };

struct SimpleEjaRow {
    EjaFamily family;
    int rank;
    int dim;
};

std::string family_name(EjaFamily f);

/// All simple EJAs of the given rank with dim <= dim_limit, one row per
/// (rank, dim) pair. Low-rank coincidences are deduplicated in favor of the
/// matrix families (so the dim-4 rank-2 row reports as complex).
std::vector<SimpleEjaRow> simple_ejas_of_rank(int r, int dim_limit);

/// True iff some simple EJA has rank r^2 and dimension N^2; holds exactly
/// for the complex Hermitian rows.
bool square_composite_exists(const SimpleEjaRow& row);

struct SummandVerdict {
    SimpleFactor factor;
    int rank;
    int dim;
    long long rank_sq;
    long long dim_sq;
    bool ok;
};

struct LocalTomographyReport {
    bool verdict;  // every rank > 1 summand admits a square composite
    std::vector<SummandVerdict> summands;
};

LocalTomographyReport is_locally_tomographic_self_composite(const AlgebraDescriptor& desc);

/// Builds ComplexHerm(n) (x) ComplexHerm(m) = ComplexHerm(n m) concretely
/// and verifies the factor-wise sequential product law on sampled effects,
/// that elementary tensors of atoms are atomic, and the rank/dimension
/// bookkeeping.
struct TensorCheckReport {
    int n = 0;
    int m = 0;
    int samples = 0;
    int composite_rank = 0;
    double max_product_residual = 0.0;
    bool atoms_atomic = false;
    bool classical_tensor_ok = false;
    bool unit_rank_ok = false;
    bool dim_ok = false;
    bool overlap_atom_ok = false;  // frame-sum atom meets every frame atom
};

TensorCheckReport explicit_tensor_checks(int n, int m, int samples = 50,
                                         std::uint64_t seed = 0,
                                         const Tolerances& tol = {}, int cap = 16);

/// Elementary tensor of two complex Hermitian elements into the composite.
Element tensor_complex(const Element& a, const Element& b);

}  // namespace sps
