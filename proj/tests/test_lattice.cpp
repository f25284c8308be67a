#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sps/lattice.hpp"
#include "sps/seqprod.hpp"

using namespace sps;

namespace {

Element diag3(double a, double b, double c) {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:3");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return Element(d, {m});
}

Element proj2(const Eigen::Vector2cd& v) {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Eigen::Vector2cd u = v.normalized();
    return Element(d, {Eigen::MatrixXcd(u * u.adjoint())});
}

}  // namespace

TEST_CASE("sharp effect construction refuses fuzzy values") {
    CHECK_NOTHROW(SharpEffect(diag3(1, 0, 1)));
    CHECK_THROWS_AS(SharpEffect(diag3(0.5, 0, 1)), Error);
}

TEST_CASE("join of orthogonal projections is their sum") {
    SharpEffect p(diag3(1, 0, 0)), q(diag3(0, 1, 0));
    CHECK(orthogonal(p, q));
    CHECK(order_unit_norm(join(p, q).value() - diag3(1, 1, 0)) < 1e-10);
    CHECK(order_unit_norm(meet(p, q).value()) < 1e-10);
}

TEST_CASE("distinct rank-1 atoms in a qubit join to the unit") {
    SharpEffect p(proj2({1, 0}));
    SharpEffect q(proj2({std::complex<double>(0.8), std::complex<double>(0.6)}));
    Element unit = Element::unit(p.descriptor());
    CHECK(order_unit_norm(join(p, q).value() - unit) < 1e-9);
    CHECK(order_unit_norm(meet(p, q).value()) < 1e-9);
    CHECK(order_unit_norm(join(p, p).value() - p.value()) < 1e-10);
    CHECK(order_unit_norm(meet(p, p).value() - p.value()) < 1e-10);
}

TEST_CASE("complement laws") {
    SharpEffect p(diag3(1, 1, 0));
    SharpEffect pc = p.complement();
    CHECK(order_unit_norm(pc.value() - diag3(0, 0, 1)) < 1e-12);
    Element unit = Element::unit(p.descriptor());
    CHECK(order_unit_norm(join(p, pc).value() - unit) < 1e-10);
    CHECK(order_unit_norm(meet(p, pc).value()) < 1e-10);
}

TEST_CASE("atomic decompositions are frames for their target") {
    for (const char* s : {"real:3", "complex:3", "quat:2", "spin:5", "complex:2+spin:3"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        SharpEffect unit(Element::unit(d));
        auto dec = atomic_decomposition(unit, std::uint64_t{5});
        CHECK(static_cast<int>(dec.atoms.size()) == d.rank());
        Element sum = Element::zero(d);
        for (const auto& a : dec.atoms) {
            CHECK(is_atomic(a));
            sum += a;
        }
        CHECK(order_unit_norm(sum - unit.value()) < 1e-8);
        CHECK(rank_of(unit) == d.rank());
    }
}

TEST_CASE("rank of projections counts their atoms") {
    CHECK(rank_of(SharpEffect(diag3(1, 1, 0))) == 2);
    CHECK(rank_of(SharpEffect(diag3(0, 0, 1))) == 1);
    CHECK(rank_of(SharpEffect(diag3(0, 0, 0))) == 0);
    AlgebraDescriptor spin = AlgebraDescriptor::parse("spin:4");
    CHECK(rank_of(SharpEffect(Element::unit(spin))) == 2);
}

TEST_CASE("covering: q below p gives a zero witness") {
    SharpEffect p(diag3(1, 1, 0)), q(diag3(1, 0, 0));
    auto res = covering_check(p, q);
    CHECK(res.kind == CoveringResult::Kind::Zero);
    CHECK(order_unit_norm(res.witness) < 1e-9);
}

TEST_CASE("covering: q orthogonal to p gives q back") {
    SharpEffect p(diag3(1, 0, 0)), q(diag3(0, 0, 1));
    auto res = covering_check(p, q);
    CHECK(res.kind == CoveringResult::Kind::Atom);
    CHECK(order_unit_norm(res.witness - q.value()) < 1e-9);
}

TEST_CASE("covering on overlapping atoms yields a single atom") {
    SharpEffect p(proj2({1, 0}));
    SharpEffect q(proj2({std::complex<double>(0.6), std::complex<double>(0.8)}));
    auto res = covering_check(p, q);
    CHECK(res.kind == CoveringResult::Kind::Atom);
    CHECK(is_atomic(res.witness));
}

TEST_CASE("covering requires an atomic second argument") {
    SharpEffect p(diag3(1, 0, 0)), q(diag3(0, 1, 1));
    CHECK_THROWS_AS(covering_check(p, q), Error);
}

TEST_CASE("join dominates and meet is dominated") {
    Rng rng(31);
    for (const char* s : {"complex:3", "quat:2", "spin:5"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(s);
        for (int k = 0; k < 10; ++k) {
            SharpEffect p(random_effect(d, rng, EffectProfile::Sharp));
            SharpEffect q(random_effect(d, rng, EffectProfile::Sharp));
            Element j = join(p, q).value();
            Element m = meet(p, q).value();
            CHECK(min_eigenvalue(j - p.value()) > -1e-8);
            CHECK(min_eigenvalue(j - q.value()) > -1e-8);
            CHECK(min_eigenvalue(p.value() - m) > -1e-8);
            CHECK(min_eigenvalue(q.value() - m) > -1e-8);
        }
    }
}
