#include "sps/loctom.hpp"
#include "sps/duality.hpp"
#include "sps/lattice.hpp"
#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"

#include <map>

namespace sps {

std::string family_name(EjaFamily f) {
    switch (f) {
        case EjaFamily::RealSym: return "real-sym";
        case EjaFamily::ComplexHerm: return "complex-herm";
        case EjaFamily::QuatHerm: return "quat-herm";
        case EjaFamily::SpinFactor: return "spin";
        case EjaFamily::Albert: return "albert";
    }
    return "?";
}

std::vector<SimpleEjaRow> simple_ejas_of_rank(int r, int dim_limit) {
    if (r < 1) throw Error("rank must be >= 1");
    std::map<int, SimpleEjaRow> by_dim;
    auto add = [&](EjaFamily family, int dim) {
        if (dim <= dim_limit) by_dim.try_emplace(dim, SimpleEjaRow{family, r, dim});
    };
    add(EjaFamily::RealSym, r * (r + 1) / 2);
    add(EjaFamily::ComplexHerm, r * r);
    add(EjaFamily::QuatHerm, r * (2 * r - 1));
    if (r == 3) add(EjaFamily::Albert, 27);
    if (r == 2)
        for (int dim = 3; dim <= dim_limit; ++dim) add(EjaFamily::SpinFactor, dim);
    std::vector<SimpleEjaRow> rows;
    for (const auto& [dim, row] : by_dim) rows.push_back(row);
    return rows;
}

bool square_composite_exists(const SimpleEjaRow& row) {
    if (row.rank <= 1) throw Error("square_composite_exists requires rank > 1");
    long long target_rank = static_cast<long long>(row.rank) * row.rank;
    long long target_dim = static_cast<long long>(row.dim) * row.dim;
    if (target_rank > 1000000 || target_dim > 100000000)
        throw Error("classification query out of range");
    for (const auto& candidate :
         simple_ejas_of_rank(static_cast<int>(target_rank), static_cast<int>(target_dim)))
        if (candidate.dim == target_dim) return true;
    return false;
}

LocalTomographyReport is_locally_tomographic_self_composite(const AlgebraDescriptor& desc) {
    LocalTomographyReport rep{true, {}};
    for (const auto& f : desc.factors) {
        SummandVerdict v{};
        v.factor = f;
        v.rank = f.rank();
        v.dim = f.dimension();
        v.rank_sq = static_cast<long long>(v.rank) * v.rank;
        v.dim_sq = static_cast<long long>(v.dim) * v.dim;
        if (v.rank <= 1) {
            v.ok = true;  // rank-1 summands are the reals, classically fine
        } else {
            SimpleEjaRow row{EjaFamily::RealSym, v.rank, v.dim};
            v.ok = square_composite_exists(row);
        }
        rep.verdict = rep.verdict && v.ok;
        rep.summands.push_back(v);
    }
    return rep;
}

Element tensor_complex(const Element& a, const Element& b) {
    const auto& fa = a.descriptor().factors;
    const auto& fb = b.descriptor().factors;
    if (fa.size() != 1 || fb.size() != 1 || fa[0].kind != FactorKind::ComplexHerm ||
        fb[0].kind != FactorKind::ComplexHerm)
        throw Error("tensor_complex requires simple complex factors");
    const auto& ma = std::get<Eigen::MatrixXcd>(a.blocks()[0]);
    const auto& mb = std::get<Eigen::MatrixXcd>(b.blocks()[0]);
    const int n = fa[0].size, m = fb[0].size;
    Eigen::MatrixXcd out(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.block(i * m, j * m, m, m) = ma(i, j) * mb;
    AlgebraDescriptor comp{{{FactorKind::ComplexHerm, n * m}}};
    return Element(comp, {Eigen::MatrixXcd(out)});
}

TensorCheckReport explicit_tensor_checks(int n, int m, int samples, std::uint64_t seed,
                                         const Tolerances& tol, int cap) {
    if (n * m > cap) throw Error("tensor check size exceeds cap");
    TensorCheckReport rep;
    rep.n = n;
    rep.m = m;
    rep.samples = samples;

    AlgebraDescriptor va{{{FactorKind::ComplexHerm, n}}};
    AlgebraDescriptor vb{{{FactorKind::ComplexHerm, m}}};
    AlgebraDescriptor comp{{{FactorKind::ComplexHerm, n * m}}};

    for (int k = 0; k < samples; ++k) {
        Rng rng = substream(seed, static_cast<std::uint64_t>(k));
        Element a1 = random_effect(va, rng, EffectProfile::Generic, tol);
        Element a2 = random_effect(va, rng, EffectProfile::Generic, tol);
        Element b1 = random_effect(vb, rng, EffectProfile::Generic, tol);
        Element b2 = random_effect(vb, rng, EffectProfile::Generic, tol);
        Element lhs = seq_prod(tensor_complex(a1, b1), tensor_complex(a2, b2), tol);
        Element rhs = tensor_complex(seq_prod(a1, a2, tol), seq_prod(b1, b2, tol));
        rep.max_product_residual =
            std::max(rep.max_product_residual, order_unit_norm(lhs - rhs));
    }

    Rng rng = substream(seed, 0xA70);
    Element p = random_effect(va, rng, EffectProfile::Atomic, tol);
    Element q = random_effect(vb, rng, EffectProfile::Atomic, tol);
    rep.atoms_atomic = is_atomic(tensor_complex(p, q), tol);

    // Classical effects of a simple factor are 0 and the unit; their tensor
    // must again commute with everything sampled.
    Element unit_comp = tensor_complex(Element::unit(va), Element::unit(vb));
    rep.classical_tensor_ok =
        order_unit_norm(unit_comp - Element::unit(comp)) <= eps_for(tol, comp, 1.0);
    for (int k = 0; k < 8 && rep.classical_tensor_ok; ++k) {
        Element e = random_effect(comp, rng, EffectProfile::Generic, tol);
        rep.classical_tensor_ok = is_compatible(unit_comp, e, tol);
    }

    SharpEffect unit_sharp(Element::unit(comp), tol);
    rep.composite_rank = rank_of(unit_sharp, tol);
    rep.unit_rank_ok = rep.composite_rank == n * m;
    rep.dim_ok = comp.dimension() == va.dimension() * vb.dimension();

    // Projection onto the normalized sum of frame vectors meets every frame
    // atom with nonzero transition probability.
    auto frame = atomic_decomposition(unit_sharp, std::uint64_t{seed}, tol).atoms;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n * m);
    for (const auto& atom : frame) {
        const auto& mat = std::get<Eigen::MatrixXcd>(atom.blocks()[0]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat);
        w += es.eigenvectors().rightCols(1);
    }
    w.normalize();
    Element overlap(comp, {Eigen::MatrixXcd(w * w.adjoint())});
    rep.overlap_atom_ok = true;
    for (const auto& atom : frame) {
        double t = transition_probability(SharpEffect(overlap, tol), SharpEffect(atom, tol), tol);
        rep.overlap_atom_ok = rep.overlap_atom_ok && t > eps_for(tol, comp, 1.0);
    }
    return rep;
}

}  // namespace sps
