#include "sps/algebra.hpp"
#include "sps/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sps {

int SimpleFactor::dimension() const {
    switch (kind) {
        case FactorKind::RealSym: return size * (size + 1) / 2;
        case FactorKind::ComplexHerm: return size * size;
        case FactorKind::QuatHerm: return size * (2 * size - 1);
        case FactorKind::SpinFactor: return size + 1;
    }
    throw Error("unreachable factor kind");
}

int SimpleFactor::rank() const {
    return kind == FactorKind::SpinFactor ? 2 : size;
}

int SimpleFactor::matrix_size() const {
    switch (kind) {
        case FactorKind::RealSym:
        case FactorKind::ComplexHerm: return size;
        case FactorKind::QuatHerm: return 2 * size;
        case FactorKind::SpinFactor: return 0;
    }
    throw Error("unreachable factor kind");
}

int AlgebraDescriptor::dimension() const {
    return std::accumulate(factors.begin(), factors.end(), 0,
                           [](int s, const SimpleFactor& f) { return s + f.dimension(); });
}

int AlgebraDescriptor::rank() const {
    return std::accumulate(factors.begin(), factors.end(), 0,
                           [](int s, const SimpleFactor& f) { return s + f.rank(); });
}

std::string AlgebraDescriptor::to_string() const {
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += '+';
        switch (f.kind) {
            case FactorKind::RealSym: out += "real:"; break;
            case FactorKind::ComplexHerm: out += "complex:"; break;
            case FactorKind::QuatHerm: out += "quat:"; break;
            case FactorKind::SpinFactor: out += "spin:"; break;
        }
        out += std::to_string(f.size);
    }
    return out;
}

AlgebraDescriptor AlgebraDescriptor::parse(std::string_view text) {
    AlgebraDescriptor desc;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t plus = text.find('+', pos);
        std::string_view tok = text.substr(pos, plus == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : plus - pos);
        size_t colon = tok.find(':');
        if (colon == std::string_view::npos)
            throw Error("descriptor token missing ':' in '" + std::string(text) + "'");
        std::string_view name = tok.substr(0, colon);
        std::string_view num = tok.substr(colon + 1);
        FactorKind kind;
        if (name == "real") kind = FactorKind::RealSym;
        else if (name == "complex") kind = FactorKind::ComplexHerm;
        else if (name == "quat") kind = FactorKind::QuatHerm;
        else if (name == "spin") kind = FactorKind::SpinFactor;
        else throw Error("unknown factor kind '" + std::string(name) + "'");
        if (num.empty() ||
            !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error("bad size parameter '" + std::string(num) + "'");
        int n = std::stoi(std::string(num));
        if (n < 1) throw Error("size parameter must be >= 1");
        desc.factors.push_back({kind, n});
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    if (desc.factors.empty()) throw Error("empty descriptor");
    return desc;
}

// --- Element ----------------------------------------------------------------

Element::Element(AlgebraDescriptor desc, std::vector<Block> blocks)
    : desc_(std::move(desc)), blocks_(std::move(blocks)) {
    if (desc_.factors.size() != blocks_.size())
        throw Error("block count does not match descriptor");
}

Element Element::zero(const AlgebraDescriptor& desc) {
    std::vector<Block> blocks;
    for (const auto& f : desc.factors) {
        if (f.kind == FactorKind::SpinFactor)
            blocks.push_back(SpinBlock{Eigen::VectorXd::Zero(f.size), 0.0});
        else
            blocks.push_back(Eigen::MatrixXcd::Zero(f.matrix_size(), f.matrix_size()));
    }
    return Element(desc, std::move(blocks));
}

Element Element::unit(const AlgebraDescriptor& desc) {
    std::vector<Block> blocks;
    for (const auto& f : desc.factors) {
        if (f.kind == FactorKind::SpinFactor)
            blocks.push_back(SpinBlock{Eigen::VectorXd::Zero(f.size), 1.0});
        else
            blocks.push_back(Eigen::MatrixXcd::Identity(f.matrix_size(), f.matrix_size()));
    }
    return Element(desc, std::move(blocks));
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

template <class MatFn, class SpinFn>
void for_blocks(Element& a, const Element& b, MatFn mat_fn, SpinFn spin_fn) {
    for (size_t i = 0; i < a.blocks().size(); ++i) {
        if (std::holds_alternative<SpinBlock>(a.blocks()[i]))
            spin_fn(std::get<SpinBlock>(a.blocks()[i]), std::get<SpinBlock>(b.blocks()[i]));
        else
            mat_fn(std::get<Eigen::MatrixXcd>(a.blocks()[i]),
                   std::get<Eigen::MatrixXcd>(b.blocks()[i]));
    }
}

}  // namespace

Element& Element::operator+=(const Element& o) {
    require_same_descriptor(*this, o);
    for_blocks(*this, o,
               [](Eigen::MatrixXcd& m, const Eigen::MatrixXcd& n) { m += n; },
               [](SpinBlock& s, const SpinBlock& t) { s.v += t.v; s.t += t.t; });
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_descriptor(*this, o);
    for_blocks(*this, o,
               [](Eigen::MatrixXcd& m, const Eigen::MatrixXcd& n) { m -= n; },
               [](SpinBlock& s, const SpinBlock& t) { s.v -= t.v; s.t -= t.t; });
    return *this;
}

Element& Element::operator*=(double s) {
    for (auto& b : blocks_) {
        if (std::holds_alternative<SpinBlock>(b)) {
            auto& sp = std::get<SpinBlock>(b);
            sp.v *= s;
            sp.t *= s;
        } else {
            std::get<Eigen::MatrixXcd>(b) *= s;
        }
    }
    return *this;
}

Element Element::operator-() const {
    Element r = *this;
    r *= -1.0;
    return r;
}

Eigen::VectorXd Element::coords() const {
    Eigen::VectorXd c(desc_.dimension());
    int k = 0;
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto& f = desc_.factors[bi];
        if (f.kind == FactorKind::SpinFactor) {
            const auto& s = std::get<SpinBlock>(blocks_[bi]);
            for (int i = 0; i < f.size; ++i) c[k++] = kSqrt2 * s.v[i];
            c[k++] = kSqrt2 * s.t;
            continue;
        }
        const auto& m = std::get<Eigen::MatrixXcd>(blocks_[bi]);
        const int n = f.size;
        switch (f.kind) {
            case FactorKind::RealSym:
                for (int i = 0; i < n; ++i) c[k++] = m(i, i).real();
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) c[k++] = kSqrt2 * m(i, j).real();
                break;
            case FactorKind::ComplexHerm:
                for (int i = 0; i < n; ++i) c[k++] = m(i, i).real();
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        c[k++] = kSqrt2 * m(i, j).real();
                        c[k++] = kSqrt2 * m(i, j).imag();
                    }
                break;
            case FactorKind::QuatHerm:
                // M = [[A, B], [-conj(B), conj(A)]], A Hermitian, B antisymmetric.
                for (int i = 0; i < n; ++i) c[k++] = m(i, i).real();
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        c[k++] = kSqrt2 * m(i, j).real();
                        c[k++] = kSqrt2 * m(i, j).imag();
                        c[k++] = kSqrt2 * m(i, n + j).real();
                        c[k++] = kSqrt2 * m(i, n + j).imag();
                    }
                break;
            default: throw Error("unreachable");
        }
    }
    return c;
}

Element Element::from_coords(const AlgebraDescriptor& desc, const Eigen::VectorXd& c) {
    if (c.size() != desc.dimension()) throw Error("coordinate size mismatch");
    Element e = Element::zero(desc);
    int k = 0;
    for (size_t bi = 0; bi < e.blocks_.size(); ++bi) {
        const auto& f = desc.factors[bi];
        if (f.kind == FactorKind::SpinFactor) {
            auto& s = std::get<SpinBlock>(e.blocks_[bi]);
            for (int i = 0; i < f.size; ++i) s.v[i] = c[k++] / kSqrt2;
            s.t = c[k++] / kSqrt2;
            continue;
        }
        auto& m = std::get<Eigen::MatrixXcd>(e.blocks_[bi]);
        const int n = f.size;
        using C = std::complex<double>;
        switch (f.kind) {
            case FactorKind::RealSym:
                for (int i = 0; i < n; ++i) m(i, i) = c[k++];
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        m(i, j) = m(j, i) = c[k++] / kSqrt2;
                    }
                break;
            case FactorKind::ComplexHerm:
                for (int i = 0; i < n; ++i) m(i, i) = c[k++];
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        double re = c[k++] / kSqrt2;
                        double im = c[k++] / kSqrt2;
                        m(i, j) = C(re, im);
                        m(j, i) = C(re, -im);
                    }
                break;
            case FactorKind::QuatHerm: {
                Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
                Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);
                for (int i = 0; i < n; ++i) A(i, i) = c[k++];
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        double ar = c[k++] / kSqrt2;
                        double ai = c[k++] / kSqrt2;
                        double br = c[k++] / kSqrt2;
                        double bi = c[k++] / kSqrt2;
                        A(i, j) = C(ar, ai);
                        A(j, i) = C(ar, -ai);
                        B(i, j) = C(br, bi);
                        B(j, i) = C(-br, -bi);
                    }
                m.topLeftCorner(n, n) = A;
                m.topRightCorner(n, n) = B;
                m.bottomLeftCorner(n, n) = -B.conjugate();
                m.bottomRightCorner(n, n) = A.conjugate();
                break;
            }
            default: throw Error("unreachable");
        }
    }
    return e;
}

void require_same_descriptor(const Element& a, const Element& b) {
    if (!(a.descriptor() == b.descriptor()))
        throw Error("descriptor mismatch: " + a.descriptor().to_string() + " vs " +
                    b.descriptor().to_string());
}

Element jordan_mul(const Element& a, const Element& b) {
    require_same_descriptor(a, b);
    Element r = a;
    for_blocks(r, b,
               [](Eigen::MatrixXcd& m, const Eigen::MatrixXcd& n) {
                   m = 0.5 * (m * n + n * m);
               },
               [](SpinBlock& s, const SpinBlock& t) {
                   Eigen::VectorXd v = t.t * s.v + s.t * t.v;
                   double u = s.v.dot(t.v) + s.t * t.t;
                   s.v = std::move(v);
                   s.t = u;
               });
    return r;
}

double reference_inner(const Element& a, const Element& b) {
    require_same_descriptor(a, b);
    double total = 0.0;
    for (size_t i = 0; i < a.blocks().size(); ++i) {
        const auto& f = a.descriptor().factors[i];
        if (f.kind == FactorKind::SpinFactor) {
            const auto& s = std::get<SpinBlock>(a.blocks()[i]);
            const auto& t = std::get<SpinBlock>(b.blocks()[i]);
            total += 2.0 * (s.v.dot(t.v) + s.t * t.t);
        } else {
            const auto& m = std::get<Eigen::MatrixXcd>(a.blocks()[i]);
            const auto& n = std::get<Eigen::MatrixXcd>(b.blocks()[i]);
            double tr = (m * n).trace().real();
            total += f.kind == FactorKind::QuatHerm ? 0.5 * tr : tr;
        }
    }
    return total;
}

namespace {

std::pair<double, double> block_eig_range(const SimpleFactor& f, const Block& b) {
    if (f.kind == FactorKind::SpinFactor) {
        const auto& s = std::get<SpinBlock>(b);
        double r = s.v.norm();
        return {s.t - r, s.t + r};
    }
    const auto& m = std::get<Eigen::MatrixXcd>(b);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
    return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

}  // namespace

double min_eigenvalue(const Element& a) {
    double lo = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < a.blocks().size(); ++i)
        lo = std::min(lo, block_eig_range(a.descriptor().factors[i], a.blocks()[i]).first);
    return lo;
}

double max_eigenvalue(const Element& a) {
    double hi = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < a.blocks().size(); ++i)
        hi = std::max(hi, block_eig_range(a.descriptor().factors[i], a.blocks()[i]).second);
    return hi;
}

double order_unit_norm(const Element& a) {
    return std::max(std::abs(min_eigenvalue(a)), std::abs(max_eigenvalue(a)));
}

double eps_for(const Tolerances& tol, const AlgebraDescriptor& desc, double scale) {
    return tol.eq_tol * desc.dimension() * std::max(1.0, scale);
}

bool is_positive(const Element& a, const Tolerances& tol) {
    return min_eigenvalue(a) >= -eps_for(tol, a.descriptor(), order_unit_norm(a));
}

bool is_effect(const Element& a, const Tolerances& tol) {
    double eps = eps_for(tol, a.descriptor(), order_unit_norm(a));
    return min_eigenvalue(a) >= -eps && max_eigenvalue(a) <= 1.0 + eps;
}

// --- randomness -------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

Rng substream(std::uint64_t seed, std::uint64_t k) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(k + 0x1234567Full)));
}

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

double gaussian(Rng& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

Element random_element(const AlgebraDescriptor& desc, Rng& rng) {
    Eigen::VectorXd c(desc.dimension());
    for (int i = 0; i < c.size(); ++i) c[i] = gaussian(rng);
    return Element::from_coords(desc, c);
}

Element random_effect(const AlgebraDescriptor& desc, Rng& rng, EffectProfile profile,
                      const Tolerances& tol) {
    std::vector<Element> frame = atomic_frame(random_element(desc, rng), rng, tol);
    const int r = static_cast<int>(frame.size());
    std::vector<double> lambda(r, 0.0);
    switch (profile) {
        case EffectProfile::Generic:
            for (auto& l : lambda) l = uniform01(rng);
            break;
        case EffectProfile::Sharp: {
            int ones = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(r));
            std::vector<int> idx(r);
            std::iota(idx.begin(), idx.end(), 0);
            for (int i = r - 1; i > 0; --i)
                std::swap(idx[i], idx[rng() % static_cast<std::uint64_t>(i + 1)]);
            for (int i = 0; i < ones; ++i) lambda[idx[i]] = 1.0;
            break;
        }
        case EffectProfile::Atomic:
            lambda[rng() % static_cast<std::uint64_t>(r)] = 1.0;
            break;
        case EffectProfile::Degenerate: {
            double shared = uniform01(rng);
            int m = (r + 1) / 2;
            for (int i = 0; i < r; ++i) lambda[i] = i < m ? shared : uniform01(rng);
            break;
        }
        case EffectProfile::Boundary:
            for (auto& l : lambda) {
                double u = uniform01(rng);
                l = u < 1.0 / 3.0 ? 0.0 : (u < 2.0 / 3.0 ? 1.0 : uniform01(rng));
            }
            break;
    }
    Element e = Element::zero(desc);
    for (int i = 0; i < r; ++i) e += lambda[i] * frame[i];
    return e;
}

}  // namespace sps
