#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sps/loctom.hpp"

using namespace sps;

TEST_CASE("simple algebras of rank 4") {
    auto rows = simple_ejas_of_rank(4, 30);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].dim == 10);
    CHECK(rows[0].family == EjaFamily::RealSym);
    CHECK(rows[1].dim == 16);
    CHECK(rows[1].family == EjaFamily::ComplexHerm);
    CHECK(rows[2].dim == 28);
    CHECK(rows[2].family == EjaFamily::QuatHerm);
}

TEST_CASE("rank 9 tops out at the quaternionic dimension") {
    int max_dim = 0;
    for (const auto& r : simple_ejas_of_rank(9, 1000)) max_dim = std::max(max_dim, r.dim);
    CHECK(max_dim == 153);
    CHECK(153 < 729);  // strictly below the dimension a square composite needs
}

TEST_CASE("rank 1 is just the reals") {
    auto rows = simple_ejas_of_rank(1, 100);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].dim == 1);
}

TEST_CASE("rank 2 includes the spin family deduplicated against matrices") {
    auto rows = simple_ejas_of_rank(2, 8);
    // dims 3..8, one row per dimension
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].dim == 3);
    CHECK(rows[0].family == EjaFamily::RealSym);  // spin:2 coincidence
    CHECK(rows[1].dim == 4);
    CHECK(rows[1].family == EjaFamily::ComplexHerm);  // spin:3 coincidence
    CHECK(rows[2].dim == 5);
    CHECK(rows[2].family == EjaFamily::SpinFactor);
    CHECK(rows[3].dim == 6);
    CHECK(rows[3].family == EjaFamily::QuatHerm);
}

TEST_CASE("rank 3 includes the exceptional algebra") {
    bool found = false;
    for (const auto& r : simple_ejas_of_rank(3, 27))
        if (r.family == EjaFamily::Albert) {
            found = true;
            CHECK(r.dim == 27);
        }
    CHECK(found);
}

TEST_CASE("square composites exist exactly for the complex family") {
    CHECK(square_composite_exists({EjaFamily::ComplexHerm, 2, 4}));
    CHECK(square_composite_exists({EjaFamily::ComplexHerm, 3, 9}));
    CHECK(square_composite_exists({EjaFamily::ComplexHerm, 4, 16}));
    CHECK(!square_composite_exists({EjaFamily::RealSym, 3, 6}));
    CHECK(!square_composite_exists({EjaFamily::QuatHerm, 2, 6}));
    CHECK(!square_composite_exists({EjaFamily::SpinFactor, 2, 6}));
    CHECK(!square_composite_exists({EjaFamily::Albert, 3, 27}));
    CHECK_THROWS_AS(square_composite_exists({EjaFamily::RealSym, 1, 1}), Error);
}

TEST_CASE("local tomography verdicts per descriptor") {
    auto verdict = [](const char* s) {
        return is_locally_tomographic_self_composite(AlgebraDescriptor::parse(s)).verdict;
    };
    CHECK(verdict("complex:2"));
    CHECK(verdict("complex:3"));
    CHECK(verdict("complex:2+complex:5"));
    CHECK(verdict("spin:3"));  // dim 4, rank 2: the qubit coincidence
    CHECK(verdict("real:1"));
    CHECK(!verdict("real:3"));
    CHECK(!verdict("quat:2"));
    CHECK(!verdict("spin:5"));
    CHECK(!verdict("complex:2+spin:5"));
    auto rep = is_locally_tomographic_self_composite(
        AlgebraDescriptor::parse("complex:2+real:3"));
    CHECK(!rep.verdict);
    REQUIRE(rep.summands.size() == 2);
    CHECK(rep.summands[0].ok);
    CHECK(!rep.summands[1].ok);
    CHECK(rep.summands[1].rank_sq == 9);
    CHECK(rep.summands[1].dim_sq == 36);
}

TEST_CASE("explicit complex tensor composite behaves multiplicatively") {
    auto rep = explicit_tensor_checks(2, 2, 30, 7);
    CHECK(rep.max_product_residual < 1e-8);
    CHECK(rep.atoms_atomic);
    CHECK(rep.classical_tensor_ok);
    CHECK(rep.composite_rank == 4);
    CHECK(rep.unit_rank_ok);
    CHECK(rep.dim_ok);
    CHECK(rep.overlap_atom_ok);
}

TEST_CASE("explicit tensor checks for 2x3") {
    auto rep = explicit_tensor_checks(2, 3, 20, 11, {}, 16);
    CHECK(rep.max_product_residual < 1e-8);
    CHECK(rep.composite_rank == 6);
    CHECK(rep.dim_ok);
}

TEST_CASE("elementary tensor of units is the composite unit") {
    AlgebraDescriptor a = AlgebraDescriptor::parse("complex:2");
    AlgebraDescriptor b = AlgebraDescriptor::parse("complex:3");
    Element t = tensor_complex(Element::unit(a), Element::unit(b));
    AlgebraDescriptor comp = AlgebraDescriptor::parse("complex:6");
    CHECK(order_unit_norm(t - Element::unit(comp)) < 1e-14);
}
