#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sps {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical knobs shared by every operation. The three values are
/// independent: eq_tol scales equality checks, eig_cluster_gap merges
/// nearly-degenerate eigenvalues, zero_cutoff truncates spectra.
struct Tolerances {
    double eq_tol = 1e-9;
    double eig_cluster_gap = 1e-7;
    double zero_cutoff = 1e-10;
};

enum class FactorKind { RealSym, ComplexHerm, QuatHerm, SpinFactor };

struct SimpleFactor {
    FactorKind kind;
    int size;  // matrix side n, or spin vector length d

    int dimension() const;
    int rank() const;
    // Side of the complex matrix holding this block (2n for the
    // quaternionic symplectic embedding, 0 for spin blocks).
    int matrix_size() const;

    bool operator==(const SimpleFactor&) const = default;
};

/// A direct sum of simple factors. Grammar: `real:n`, `complex:n`,
/// `quat:n`, `spin:d` joined by `+`, e.g. "complex:2+spin:3".
struct AlgebraDescriptor {
    std::vector<SimpleFactor> factors;

    int dimension() const;
    int rank() const;
    std::string to_string() const;
    static AlgebraDescriptor parse(std::string_view text);

    bool operator==(const AlgebraDescriptor&) const = default;
};

struct SpinBlock {
    Eigen::VectorXd v;
    double t = 0.0;
};

using Block = std::variant<Eigen::MatrixXcd, SpinBlock>;

/// A point of the algebra. Matrix factors are stored as complex Hermitian
/// matrices (real-symmetric blocks carry zero imaginary part, quaternionic
/// blocks live in their 2n x 2n symplectic embedding); spin factors as a
/// (vector, scalar) pair.
class Element {
  public:
    Element() = default;
    Element(AlgebraDescriptor desc, std::vector<Block> blocks);

    static Element zero(const AlgebraDescriptor& desc);
    static Element unit(const AlgebraDescriptor& desc);

    const AlgebraDescriptor& descriptor() const { return desc_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::vector<Block>& blocks() { return blocks_; }

    // Coordinates w.r.t. an orthonormal basis of the reference inner
    // product, so reference_inner(a, b) == a.coords().dot(b.coords()).
    Eigen::VectorXd coords() const;
    static Element from_coords(const AlgebraDescriptor& desc,
                               const Eigen::VectorXd& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(double s);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(double s, Element a) { return a *= s; }
    friend Element operator*(Element a, double s) { return a *= s; }
    Element operator-() const;

  private:
    AlgebraDescriptor desc_;
    std::vector<Block> blocks_;
};

void require_same_descriptor(const Element& a, const Element& b);

/// Canonical Jordan product: (AB + BA)/2 on matrix blocks,
/// (v,s)(w,t) = (t v + s w, <v,w> + s t) on spin blocks.
Element jordan_mul(const Element& a, const Element& b);

/// Associative trace form, normalized so atomic idempotents have unit
/// norm: Re tr(AB) on real/complex blocks, halved on quaternionic
/// embeddings, 2(<v,w> + st) on spin blocks.
double reference_inner(const Element& a, const Element& b);

double min_eigenvalue(const Element& a);
double max_eigenvalue(const Element& a);

/// Order-unit norm: max |eigenvalue|.
double order_unit_norm(const Element& a);

bool is_positive(const Element& a, const Tolerances& tol = {});
bool is_effect(const Element& a, const Tolerances& tol = {});

/// Scale-aware equality tolerance: eq_tol * dim * max(1, scale).
double eps_for(const Tolerances& tol, const AlgebraDescriptor& desc,
               double scale = 1.0);

// --- seeded randomness -----------------------------------------------------

using Rng = std::mt19937_64;

/// Independent substream for sample index k of a seeded run.
Rng substream(std::uint64_t seed, std::uint64_t k);

double uniform01(Rng& rng);
double gaussian(Rng& rng);

Element random_element(const AlgebraDescriptor& desc, Rng& rng);

enum class EffectProfile { Generic, Sharp, Atomic, Degenerate, Boundary };

Element random_effect(const AlgebraDescriptor& desc, Rng& rng,
                      EffectProfile profile = EffectProfile::Generic,
                      const Tolerances& tol = {});

}  // namespace sps
