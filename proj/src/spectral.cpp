#include "sps/spectral.hpp"
#include "sps/seqprod.hpp"

#include <algorithm>
#include <cmath>

namespace sps {

namespace {

struct BlockTerm {
    double lambda;
    size_t block_index;
    Block projection;
};

// Spectral terms of one block, clustered by eig_cluster_gap.
std::vector<BlockTerm> block_spectral(const SimpleFactor& f, size_t bi, const Block& b,
                                      const Tolerances& tol) {
    std::vector<BlockTerm> out;
    if (f.kind == FactorKind::SpinFactor) {
        const auto& s = std::get<SpinBlock>(b);
        double r = s.v.norm();
        if (r <= tol.eig_cluster_gap * 0.5) {
            out.push_back({s.t, bi, SpinBlock{Eigen::VectorXd::Zero(f.size), 1.0}});
        } else {
            Eigen::VectorXd u = s.v / r;
            out.push_back({s.t - r, bi, SpinBlock{-0.5 * u, 0.5}});
            out.push_back({s.t + r, bi, SpinBlock{0.5 * u, 0.5}});
        }
        return out;
    }
    const auto& m = std::get<Eigen::MatrixXcd>(b);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    int n = static_cast<int>(vals.size());
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && vals[end] - vals[end - 1] < tol.eig_cluster_gap) ++end;
        Eigen::MatrixXcd v = vecs.middleCols(start, end - start);
        out.push_back({vals.segment(start, end - start).mean(), bi,
                       Eigen::MatrixXcd(v * v.adjoint())});
        start = end;
    }
    return out;
}

Element embed_block(const AlgebraDescriptor& desc, size_t bi, const Block& b) {
    Element e = Element::zero(desc);
    e.blocks()[bi] = b;
    return e;
}

}  // namespace

Element SpectralForm::reconstruct() const {
    Element e = Element::zero(descriptor);
    for (const auto& t : terms) e += t.lambda * t.idempotent;
    return e;
}

Element SpectralForm::map_eigenvalues(const std::function<double(double)>& f) const {
    Element e = Element::zero(descriptor);
    for (const auto& t : terms) e += f(t.lambda) * t.idempotent;
    return e;
}

int SpectralForm::support_rank() const {
    int r = 0;
    for (const auto& t : terms) r += idempotent_rank(t.idempotent);
    return r;
}

int idempotent_rank(const Element& p) {
    return static_cast<int>(std::lround(reference_inner(p, Element::unit(p.descriptor()))));
}

SpectralForm spectral_decompose(const Element& a, const Tolerances& tol, bool keep_zero) {
    std::vector<BlockTerm> items;
    for (size_t bi = 0; bi < a.blocks().size(); ++bi) {
        auto bt = block_spectral(a.descriptor().factors[bi], bi, a.blocks()[bi], tol);
        items.insert(items.end(), bt.begin(), bt.end());
    }
    std::sort(items.begin(), items.end(),
              [](const BlockTerm& x, const BlockTerm& y) { return x.lambda < y.lambda; });

    SpectralForm form{a.descriptor(), {}};
    size_t start = 0;
    while (start < items.size()) {
        size_t end = start + 1;
        while (end < items.size() &&
               items[end].lambda - items[end - 1].lambda < tol.eig_cluster_gap)
            ++end;
        Element idem = Element::zero(a.descriptor());
        double lambda_sum = 0.0;
        double weight = 0.0;
        for (size_t i = start; i < end; ++i) {
            Element p = embed_block(a.descriptor(), items[i].block_index, items[i].projection);
            double w = reference_inner(p, Element::unit(a.descriptor()));
            idem += p;
            lambda_sum += items[i].lambda * w;
            weight += w;
        }
        double lambda = weight > 0.0 ? lambda_sum / weight : items[start].lambda;
        if (keep_zero || std::abs(lambda) > tol.zero_cutoff)
            form.terms.push_back({lambda, std::move(idem)});
        start = end;
    }
    return form;
}

Element sqrt_effect(const Element& a, const Tolerances& tol) {
    if (!is_positive(a, tol)) throw Error("sqrt_effect requires a positive element");
    return spectral_decompose(a, tol).map_eigenvalues(
        [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

Element power(const Element& a, int n, const Tolerances& tol) {
    if (n < 0) throw Error("power requires a nonnegative exponent");
    if (!is_positive(a, tol)) throw Error("power requires a positive element");
    if (n == 0) return Element::unit(a.descriptor());
    return spectral_decompose(a, tol).map_eigenvalues(
        [n](double l) { return std::pow(std::max(l, 0.0), n); });
}

Element inverse(const Element& a, const Tolerances& tol) {
    if (min_eigenvalue(a) <= tol.zero_cutoff)
        throw Error("inverse requires a strictly positive element");
    return spectral_decompose(a, tol).map_eigenvalues([](double l) { return 1.0 / l; });
}

bool is_sharp(const Element& a, const Tolerances& tol) {
    if (!is_effect(a, tol)) throw Error("is_sharp requires an effect");
    Element d = seq_prod(a, a, tol) - a;
    return order_unit_norm(d) <= eps_for(tol, a.descriptor(), order_unit_norm(a));
}

bool is_atomic(const Element& a, const Tolerances& tol) {
    if (!is_sharp(a, tol)) return false;
    SpectralForm form = spectral_decompose(a, tol);
    return form.terms.size() == 1 && idempotent_rank(form.terms[0].idempotent) == 1;
}

Element ceiling(const Element& a, const Tolerances& tol) {
    if (!is_effect(a, tol)) throw Error("ceiling requires an effect");
    Element c = Element::zero(a.descriptor());
    for (const auto& t : spectral_decompose(a, tol).terms)
        if (t.lambda > tol.zero_cutoff) c += t.idempotent;
    return c;
}

Element floor_sharp(const Element& a, const Tolerances& tol) {
    if (!is_effect(a, tol)) throw Error("floor requires an effect");
    Element u = Element::unit(a.descriptor());
    return u - ceiling(u - a, tol);
}

// --- atomic frames ----------------------------------------------------------

namespace {

Eigen::MatrixXcd random_unitary(int m, Rng& rng) {
    Eigen::MatrixXcd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = {gaussian(rng), gaussian(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(m, m);
}

Eigen::MatrixXd random_orthogonal(int m, Rng& rng) {
    Eigen::MatrixXd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = gaussian(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
}

// Orthonormal range basis of a projection block (eigenvalue > 1/2 subspace).
Eigen::MatrixXcd projection_range(const Eigen::MatrixXcd& p) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p);
    if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
    int m = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > 0.5) ++m;
    return es.eigenvectors().rightCols(m);
}

// Splits a quaternionic (embedded) projection into rank-2 embedded atoms by
// greedily pairing each range vector with its symplectic partner J conj(u).
std::vector<Eigen::MatrixXcd> split_quat_range(const Eigen::MatrixXcd& range, Rng& rng) {
    const int two_n = static_cast<int>(range.rows());
    const int n = two_n / 2;
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(two_n, two_n);
    J.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    J.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);

    std::vector<Eigen::MatrixXcd> atoms;
    Eigen::MatrixXcd v = range;
    while (v.cols() > 0) {
        Eigen::VectorXcd c(v.cols());
        for (int i = 0; i < c.size(); ++i) c[i] = {gaussian(rng), gaussian(rng)};
        Eigen::VectorXcd u = v * c;
        u.normalize();
        Eigen::VectorXcd w = J * u.conjugate();
        atoms.push_back(u * u.adjoint() + w * w.adjoint());
        if (v.cols() == 2) break;
        // Deflate the paired directions out of the remaining range.
        Eigen::MatrixXcd rest = v - u * (u.adjoint() * v) - w * (w.adjoint() * v);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rest, Eigen::ComputeThinU);
        v = svd.matrixU().leftCols(v.cols() - 2);
    }
    return atoms;
}

}  // namespace

std::vector<Element> split_idempotent(const Element& p, Rng& rng, const Tolerances& tol) {
    std::vector<Element> atoms;
    const auto& desc = p.descriptor();
    for (size_t bi = 0; bi < p.blocks().size(); ++bi) {
        const auto& f = desc.factors[bi];
        if (f.kind == FactorKind::SpinFactor) {
            const auto& s = std::get<SpinBlock>(p.blocks()[bi]);
            double r = s.v.norm();
            if (s.t + r < 0.5) continue;  // zero block
            if (s.t - r < 0.5) {          // already an atom
                atoms.push_back(embed_block(desc, bi, SpinBlock{s.v, s.t}));
            } else {  // unit block: pick a random antipodal atom pair
                Eigen::VectorXd u(f.size);
                for (int i = 0; i < f.size; ++i) u[i] = gaussian(rng);
                u.normalize();
                atoms.push_back(embed_block(desc, bi, SpinBlock{0.5 * u, 0.5}));
                atoms.push_back(embed_block(desc, bi, SpinBlock{-0.5 * u, 0.5}));
            }
            continue;
        }
        Eigen::MatrixXcd range = projection_range(std::get<Eigen::MatrixXcd>(p.blocks()[bi]));
        const int m = static_cast<int>(range.cols());
        if (m == 0) continue;
        switch (f.kind) {
            case FactorKind::RealSym: {
                // Re-solve over the reals so the frame stays real even on
                // degenerate eigenspaces.
                Eigen::MatrixXd pr = std::get<Eigen::MatrixXcd>(p.blocks()[bi]).real();
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> res(pr);
                if (res.info() != Eigen::Success) throw Error("eigensolver did not converge");
                Eigen::MatrixXd v = res.eigenvectors().rightCols(m) * random_orthogonal(m, rng);
                for (int j = 0; j < m; ++j) {
                    Eigen::MatrixXcd a = (v.col(j) * v.col(j).transpose()).cast<std::complex<double>>();
                    atoms.push_back(embed_block(desc, bi, std::move(a)));
                }
                break;
            }
            case FactorKind::ComplexHerm: {
                Eigen::MatrixXcd v = range * random_unitary(m, rng);
                for (int j = 0; j < m; ++j)
                    atoms.push_back(embed_block(desc, bi,
                                                Eigen::MatrixXcd(v.col(j) * v.col(j).adjoint())));
                break;
            }
            case FactorKind::QuatHerm: {
                for (auto& a : split_quat_range(range, rng))
                    atoms.push_back(embed_block(desc, bi, std::move(a)));
                break;
            }
            default: throw Error("unreachable");
        }
    }
    (void)tol;
    return atoms;
}

std::vector<Element> atomic_frame(const Element& a, Rng& rng, const Tolerances& tol) {
    std::vector<Element> atoms;
    for (const auto& t : spectral_decompose(a, tol, /*keep_zero=*/true).terms) {
        auto split = split_idempotent(t.idempotent, rng, tol);
        atoms.insert(atoms.end(), std::make_move_iterator(split.begin()),
                     std::make_move_iterator(split.end()));
    }
    return atoms;
}

// --- classical algebra ------------------------------------------------------

ClassicalAlgebraReport classical_algebra_check(const Element& a, int max_power,
                                               const Tolerances& tol) {
    if (!is_effect(a, tol)) throw Error("classical_algebra_check requires an effect");
    const auto& desc = a.descriptor();
    if (max_power < 0) max_power = 2 * desc.rank();

    std::vector<Element> span;
    Element unit = Element::unit(desc);
    Element ap = unit - a;
    Element pa = unit, pb = unit;
    span.push_back(unit);
    std::vector<Element> a_powers{unit};
    for (int k = 1; k <= max_power; ++k) {
        pa = seq_prod(a, pa, tol);
        pb = seq_prod(ap, pb, tol);
        a_powers.push_back(pa);
        span.push_back(pa);
        span.push_back(pb);
    }

    ClassicalAlgebraReport rep{};
    rep.dim = static_cast<int>(spectral_decompose(a, tol, /*keep_zero=*/true).terms.size());

    Eigen::MatrixXd gram(a_powers.size(), a_powers.size());
    for (size_t i = 0; i < a_powers.size(); ++i)
        for (size_t j = 0; j < a_powers.size(); ++j)
            gram(i, j) = reference_inner(a_powers[i], a_powers[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    double cut = 1e-8 * std::max(1.0, es.eigenvalues().maxCoeff());
    rep.gram_rank = static_cast<int>((es.eigenvalues().array() > cut).count());

    Rng rng(0xC1A551CA1u);
    auto sample_effect = [&]() {
        Element x = Element::zero(desc);
        for (const auto& s : span) x += uniform01(rng) * s;
        double n = order_unit_norm(x);
        if (n > 1.0) x *= 1.0 / n;
        return x;
    };
    rep.samples = 16;
    for (int k = 0; k < rep.samples; ++k) {
        Element x = sample_effect(), y = sample_effect(), z = sample_effect();
        double comm = order_unit_norm(seq_prod(x, y, tol) - seq_prod(y, x, tol));
        double assoc = order_unit_norm(seq_prod(x, seq_prod(y, z, tol), tol) -
                                       seq_prod(seq_prod(x, y, tol), z, tol));
        rep.max_commutator = std::max(rep.max_commutator, comm);
        rep.max_associator = std::max(rep.max_associator, assoc);
    }
    return rep;
}

}  // namespace sps
