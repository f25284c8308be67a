#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sps/duality.hpp"
#include "sps/reconstruct.hpp"
#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"

using namespace sps;

namespace {

Element proj2(const Eigen::Vector2cd& v) {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Eigen::Vector2cd u = v.normalized();
    return Element(d, {Eigen::MatrixXcd(u * u.adjoint())});
}

}  // namespace

TEST_CASE("atom product with the unit returns the atom") {
    SharpEffect p(proj2({1, 0}));
    Element unit = Element::unit(p.descriptor());
    CHECK(order_unit_norm(atom_jordan(p, unit) - p.value()) < 1e-10);
    CHECK(order_unit_norm(atom_jordan(p, p.value()) - p.value()) < 1e-10);
}

TEST_CASE("atom product rejects non-atoms") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:3");
    SharpEffect p(Element::unit(d));
    CHECK_THROWS_AS(atom_jordan(p, Element::unit(d)), Error);
}

TEST_CASE("orthogonal atoms annihilate") {
    SharpEffect p(proj2({1, 0}));
    Element q = proj2({0, 1});
    CHECK(order_unit_norm(atom_jordan(p, q)) < 1e-10);
}

TEST_CASE("atom product agrees with the canonical Jordan product") {
    for (const char* s : {"real:3", "complex:3", "quat:2", "spin:5", "complex:2+spin:3"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        Rng rng(51);
        for (int k = 0; k < 10; ++k) {
            SharpEffect p(random_effect(d, rng, EffectProfile::Atomic));
            Element b = random_element(d, rng);
            CHECK(order_unit_norm(atom_jordan(p, b) - jordan_mul(p.value(), b)) <
                  1e-8 * d.dimension() * std::max(1.0, order_unit_norm(b)));
        }
    }
}

TEST_CASE("reconstructed product matches the canonical one on generic pairs") {
    for (const char* s : {"real:3", "complex:3", "quat:2", "spin:5", "complex:2+spin:3"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        Rng rng(52);
        for (int k = 0; k < 10; ++k) {
            Element a = random_element(d, rng);
            Element b = random_element(d, rng);
            double scale = std::max(1.0, order_unit_norm(a) * order_unit_norm(b));
            CHECK(order_unit_norm(reconstructed_mul(a, b, {}, k) - jordan_mul(a, b)) <
                  1e-8 * d.dimension() * scale);
        }
    }
}

TEST_CASE("reconstruction is independent of the splitting frame") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("quat:2");
    Rng rng(53);
    Element a = random_effect(d, rng, EffectProfile::Degenerate);
    Element b = random_element(d, rng);
    Element r1 = reconstructed_mul(a, b, {}, 1);
    Element r2 = reconstructed_mul(a, b, {}, 999);
    CHECK(order_unit_norm(r1 - r2) < 1e-8 * d.dimension());
}

TEST_CASE("closed form for the product of two atoms") {
    Eigen::Vector2cd u(1, 0), w(std::complex<double>(0.6), std::complex<double>(0.8));
    SharpEffect p(proj2(u)), q(proj2(w));
    Element jq = join(p, q).value();
    Element pprime = jq - p.value();
    double tp = transition_probability(p, q);
    double tprime = transition_probability(SharpEffect(pprime), q);
    Element closed = q.value() + tp * p.value() - tprime * pprime;
    CHECK(order_unit_norm(2.0 * atom_jordan(p, q.value()) - closed) < 1e-8);
}

TEST_CASE("T operators of compatible effects commute") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:3");
    Rng rng(54);
    auto frame = atomic_frame(random_element(d, rng), rng);
    Element a = 0.2 * frame[0] + 0.7 * frame[1] + 0.4 * frame[2];
    Element b = 0.9 * frame[0] + 0.1 * frame[2];
    auto rep = verify_t_commutation(a, b);
    CHECK(rep.compatible);
    CHECK(rep.commutator_norm < 1e-8);
}

TEST_CASE("T operator of an element commutes with that of its square") {
    for (const char* s : {"complex:2", "quat:2", "spin:3"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        Rng rng(55);
        Element a = random_effect(d, rng);
        Element sq = jordan_mul(a, a);
        CHECK(verify_t_commutation(a, sq).commutator_norm < 1e-8 * d.dimension());
    }
}

TEST_CASE("T operator matrix realizes the reconstructed product") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Rng rng(56);
    Element a = random_element(d, rng);
    Eigen::MatrixXd ta = t_operator(a, {}, 3);
    for (int k = 0; k < 5; ++k) {
        Element b = random_element(d, rng);
        Element via_op = Element::from_coords(d, ta * b.coords());
        CHECK(order_unit_norm(via_op - jordan_mul(a, b)) <
              1e-8 * std::max(1.0, order_unit_norm(a) * order_unit_norm(b)));
    }
}

TEST_CASE("operator norm agrees with a known matrix") {
    Eigen::MatrixXd m(2, 2);
    m << 3, 0, 0, -4;
    CHECK(operator_norm(m) == doctest::Approx(4.0).epsilon(1e-12));
}
