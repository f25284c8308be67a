#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sps/duality.hpp"
#include "sps/spectral.hpp"

using namespace sps;

namespace {

Element proj2(const Eigen::Vector2cd& v) {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Eigen::Vector2cd u = v.normalized();
    return Element(d, {Eigen::MatrixXcd(u * u.adjoint())});
}

Element diag2(double a, double b) {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return Element(d, {m});
}

}  // namespace

TEST_CASE("trace state normalizes the unit") {
    for (const char* s : {"real:3", "complex:2", "quat:2", "spin:4"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        StateFunctional tr = trace_state(d);
        CHECK(tr(Element::unit(d)) == doctest::Approx(1.0).epsilon(1e-12));
        Rng rng(41);
        Element a = random_effect(d, rng);
        CHECK(tr(a) >= -1e-12);
        CHECK(tr(a) <= 1.0 + 1e-12);
    }
}

TEST_CASE("pure state of a basis projection reads the diagonal") {
    StateFunctional omega = pure_state_of(SharpEffect(diag2(1, 0)));
    CHECK(omega(diag2(0.3, 0.9)) == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(omega(diag2(1, 0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(omega(diag2(0, 1)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("transition probability matches the squared overlap") {
    Eigen::Vector2cd u(1, 0);
    Eigen::Vector2cd w(std::complex<double>(0.6), std::complex<double>(0.0, 0.8));
    SharpEffect p(proj2(u)), q(proj2(w));
    double expect = std::norm(u.normalized().adjoint().dot(w.normalized()));
    CHECK(transition_probability(p, q) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(transition_probability(q, p) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("transition probability of orthogonal atoms vanishes") {
    SharpEffect p(proj2({1, 0})), q(proj2({0, 1}));
    CHECK(transition_probability(p, q) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(transition_probability(p, p) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("self-dual form reproduces the reference inner product") {
    for (const char* s : {"real:3", "complex:2", "quat:2", "spin:4", "complex:2+spin:3"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        SelfDualForm form = build_self_dual_inner(d, 17);
        CHECK((form.gram - Eigen::MatrixXd::Identity(d.dimension(), d.dimension()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-7 * d.dimension());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            Eigen::MatrixXd(0.5 * (form.gram + form.gram.transpose())),
            Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > 1e-8);
    }
}

TEST_CASE("pairing of an element with itself sums squared eigenvalues") {
    for (const char* s : {"complex:3", "quat:2", "spin:5"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        Rng rng(43);
        for (int k = 0; k < 5; ++k) {
            Element a = random_element(d, rng);
            double expect = 0.0;
            for (const auto& t : spectral_decompose(a).terms)
                expect += t.lambda * t.lambda * idempotent_rank(t.idempotent);
            Rng fr(101 + k);
            CHECK(self_dual_pairing(a, a, fr) ==
                  doctest::Approx(expect).epsilon(1e-7));
            CHECK(reference_inner(a, a) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("pairing is frame independent and matches the reference form") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:3");
    Rng rng(44);
    for (int k = 0; k < 5; ++k) {
        Element a = random_element(d, rng);
        Element b = random_element(d, rng);
        Rng f1(7 + k), f2(1000 + k);
        double v1 = self_dual_pairing(a, b, f1);
        double v2 = self_dual_pairing(a, b, f2);
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-7));
        CHECK(v1 == doctest::Approx(reference_inner(a, b)).epsilon(1e-7));
    }
}

TEST_CASE("states separate distinct elements") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Element v = diag2(0.8, 0.1);
    Element w = diag2(0.1, 0.8);
    StateFunctional omega = pure_state_of(SharpEffect(diag2(1, 0)));
    CHECK(std::abs(omega(v) - omega(w)) > 0.5);
}
