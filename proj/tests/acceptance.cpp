// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include "sps/duality.hpp"
#include "sps/lattice.hpp"
#include "sps/loctom.hpp"
#include "sps/reconstruct.hpp"
#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"
#include "sps/verify.hpp"

#include <cmath>
#include <cstdio>
#include <string>

using namespace sps;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
    std::printf("%-4s %s%s%s\n", ok ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

bool zoo_suite_passes(const char* suite, int samples, std::string& detail) {
    for (const auto& d : default_zoo()) {
        auto rep = run_suite(suite, d, samples, 2026);
        if (!rep.pass) {
            detail = d.to_string() + ": " + rep.failures.front().predicate +
                     " violation=" + std::to_string(rep.failures.front().violation);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::string detail;

    // 1. sequential-product axioms on 200 samples per algebra, plus a
    //    finite continuity probe.
    {
        bool ok = zoo_suite_passes("axioms", 200, detail);
        double worst = 0.0;
        for (const auto& d : default_zoo())
            worst = std::max(worst, continuity_probe(d, 20, 2026));
        ok = ok && std::isfinite(worst);
        char buf[64];
        std::snprintf(buf, sizeof buf, "holder probe %.3f", worst);
        report("axiom suite (200 samples/algebra)", ok, ok ? buf : detail);
    }

    // 2. spectral decomposition on 200 samples with degenerate profiles in
    //    the rotation, including ceiling/floor laws.
    report("spectral suite (200 samples/algebra)", zoo_suite_passes("spectral", 200, detail),
           detail);

    // 3. homogeneity: 100 interior pairs, 50 positivity probes each way.
    report("homogeneity (100 pairs, 50 probes each way)",
           zoo_suite_passes("homogeneity", 100, detail), detail);

    // 4. lattice laws, covering verdicts and 3-frame rank agreement.
    report("lattice/rank (200 samples, 3 frames)", zoo_suite_passes("lattice", 200, detail),
           detail);

    // 5. duality: transition symmetry on 500 atom pairs per algebra and a
    //    positive-definite reconstructed inner form.
    {
        bool ok = true;
        detail.clear();
        for (const auto& d : default_zoo()) {
            Tolerances tol;
            double eps = eps_for(tol, d);
            for (int k = 0; k < 500 && ok; ++k) {
                Rng rng = substream(2026, static_cast<std::uint64_t>(k));
                SharpEffect p(random_effect(d, rng, EffectProfile::Atomic));
                SharpEffect q(random_effect(d, rng, EffectProfile::Atomic));
                double asym = std::abs(transition_probability(p, q) -
                                       transition_probability(q, p));
                if (asym > eps) {
                    ok = false;
                    detail = d.to_string() + ": asymmetry " + std::to_string(asym);
                }
            }
            SelfDualForm form = build_self_dual_inner(d, 2026);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
                Eigen::MatrixXd(0.5 * (form.gram + form.gram.transpose())),
                Eigen::EigenvaluesOnly);
            if (es.eigenvalues().minCoeff() <= 1e-8) {
                ok = false;
                detail = d.to_string() + ": gram not positive definite";
            }
            if ((form.gram -
                 Eigen::MatrixXd::Identity(d.dimension(), d.dimension()))
                    .cwiseAbs()
                    .maxCoeff() > 10.0 * eps_for(tol, d)) {
                ok = false;
                detail = d.to_string() + ": gram differs from reference form";
            }
        }
        std::string d2;
        ok = ok && zoo_suite_passes("duality", 100, d2);
        if (detail.empty()) detail = d2;
        report("duality (500 atom pairs/algebra, PD form)", ok, detail);
    }

    // 6. reconstruction of the Jordan product on 200 pairs per algebra.
    {
        bool ok = true;
        detail.clear();
        for (const auto& d : default_zoo()) {
            for (int k = 0; k < 200 && ok; ++k) {
                Rng rng = substream(2026 + 7, static_cast<std::uint64_t>(k));
                Element a = random_element(d, rng);
                Element b = random_element(d, rng);
                double scale = std::max(1.0, order_unit_norm(a) * order_unit_norm(b));
                double resid =
                    order_unit_norm(reconstructed_mul(a, b, {}, 2026 + k) - jordan_mul(a, b));
                if (resid > 1e-8 * d.dimension() * scale) {
                    ok = false;
                    detail = d.to_string() + ": residual " + std::to_string(resid);
                }
            }
        }
        std::string d2;
        ok = ok && zoo_suite_passes("reconstruction", 100, d2);
        if (detail.empty()) detail = d2;
        report("reconstruction (200 pairs/algebra)", ok, detail);
    }

    // 7. local tomography classification, with the rank-4 dimensions
    //    {10,16,28}, the rank-9 maximum 153, and the 2x2 tensor composite.
    {
        bool ok = true;
        detail.clear();
        auto rows = simple_ejas_of_rank(4, 30);
        ok = ok && rows.size() == 3 && rows[0].dim == 10 && rows[1].dim == 16 &&
             rows[2].dim == 28;
        int max9 = 0;
        for (const auto& r : simple_ejas_of_rank(9, 1000)) max9 = std::max(max9, r.dim);
        ok = ok && max9 == 153;
        auto verdict = [](const char* s) {
            return is_locally_tomographic_self_composite(AlgebraDescriptor::parse(s)).verdict;
        };
        ok = ok && verdict("complex:2") && verdict("complex:3") && verdict("complex:4") &&
             !verdict("real:3") && !verdict("quat:2") && !verdict("spin:5") &&
             !square_composite_exists({EjaFamily::Albert, 3, 27});
        auto trep = explicit_tensor_checks(2, 2, 50, 2026);
        ok = ok && trep.max_product_residual < 1e-8 && trep.atoms_atomic &&
             trep.composite_rank == 4 && trep.dim_ok;
        auto lrep = run_suite("loctom", AlgebraDescriptor::parse("complex:2+spin:3"), 50, 2026);
        if (!lrep.pass) detail = lrep.failures.front().predicate;
        ok = ok && lrep.pass;
        report("local tomography classification", ok, detail);
    }

    // 8. byte-identical reports for identical parameters, elapsed aside.
    {
        bool ok = true;
        for (const char* suite : {"axioms", "spectral", "lattice"}) {
            auto j1 = run_suite(suite, AlgebraDescriptor::parse("quat:2"), 20, 99).to_json();
            auto j2 = run_suite(suite, AlgebraDescriptor::parse("quat:2"), 20, 99).to_json();
            j1.erase("elapsed_s");
            j2.erase("elapsed_s");
            ok = ok && j1.dump() == j2.dump();
        }
        report("deterministic reports", ok);
    }

    return g_failures == 0 ? 0 : 1;
}
