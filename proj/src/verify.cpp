#include "sps/verify.hpp"
#include "sps/duality.hpp"
#include "sps/lattice.hpp"
#include "sps/loctom.hpp"
#include "sps/reconstruct.hpp"
#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sps {

namespace {

std::string hexf(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

}  // namespace

std::string hex_coords(const Element& e) {
    Eigen::VectorXd c = e.coords();
    std::string s = "[";
    for (int i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += hexf(c[i]);
    }
    s += ']';
    return s;
}

void SuiteContext::check(const std::string& predicate, double violation, double limit,
                         const std::vector<const Element*>& witnesses) {
    if (std::isfinite(violation) && violation <= limit) return;
    std::string inputs;
    for (const Element* w : witnesses) {
        if (!inputs.empty()) inputs += ';';
        inputs += hex_coords(*w);
    }
    failures->push_back({predicate, std::move(inputs), violation});
}

double SuiteContext::eps(double scale) const { return eps_for(tol, desc, scale); }

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["algebra"] = algebra;
    j["seed"] = seed;
    j["samples"] = samples;
    j["pass"] = pass;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json jf;
        jf["predicate"] = f.predicate;
        jf["inputs"] = f.inputs;
        jf["violation"] = f.violation;
        j["failures"].push_back(std::move(jf));
    }
    j["elapsed_s"] = elapsed_s;
    return j;
}

namespace {

// Effect supported on a subset of a frame, with coefficients from rng.
Element frame_effect(const std::vector<Element>& frame, const std::vector<int>& idx,
                     Rng& rng, bool sharp = false) {
    Element e = Element::zero(frame.front().descriptor());
    for (int i : idx) e += (sharp ? 1.0 : uniform01(rng)) * frame[i];
    return e;
}

std::vector<int> random_subset(int n, Rng& rng, bool proper_nonempty) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (rng() & 1u) idx.push_back(i);
    if (proper_nonempty) {
        if (idx.empty()) idx.push_back(static_cast<int>(rng() % n));
        if (static_cast<int>(idx.size()) == n) idx.pop_back();
    }
    return idx;
}

double comm_norm(const Element& a, const Element& b, const Tolerances& tol) {
    return order_unit_norm(seq_prod(a, b, tol) - seq_prod(b, a, tol));
}

// --- axioms ------------------------------------------------------------------

void suite_axioms(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const Element unit = Element::unit(desc);
    const Element zero = Element::zero(desc);
    const double eps = ctx.eps();
    const double eps2 = 10.0 * eps;  // implication-consequent tier

    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        Element a = random_effect(desc, rng);
        Element b = random_effect(desc, rng);
        Element c = random_effect(desc, rng);

        // S1 additivity (halved so the sum stays an effect)
        Element b2 = 0.5 * b, c2 = 0.5 * c;
        ctx.check("S1-additivity",
                  order_unit_norm(seq_prod(a, b2 + c2, ctx.tol) - seq_prod(a, b2, ctx.tol) -
                                  seq_prod(a, c2, ctx.tol)),
                  eps, {&a, &b, &c});

        // S3 unitality and the zero laws
        ctx.check("S3-unitality", order_unit_norm(seq_prod(unit, a, ctx.tol) - a), eps, {&a});
        ctx.check("unit-absorbs", order_unit_norm(seq_prod(a, unit, ctx.tol) - a), eps, {&a});
        ctx.check("zero-absorbs", order_unit_norm(seq_prod(a, zero, ctx.tol)), eps, {&a});

        // a & b <= a
        ctx.check("seq-below-first",
                  std::max(0.0, -min_eigenvalue(a - seq_prod(a, b, ctx.tol))), eps, {&a, &b});

        // monotonicity in the second argument
        Element lo = 0.5 * a;
        Element hi = lo + 0.5 * b;
        ctx.check("seq-monotone",
                  std::max(0.0, -min_eigenvalue(seq_prod(c, hi, ctx.tol) -
                                                seq_prod(c, lo, ctx.tol))),
                  eps, {&a, &b, &c});

        // scalar laws
        double lam = uniform01(rng);
        Element ab = seq_prod(a, b, ctx.tol);
        ctx.check("scalar-first",
                  order_unit_norm(seq_prod(lam * a, b, ctx.tol) - lam * ab), eps, {&a, &b});
        ctx.check("scalar-second",
                  order_unit_norm(seq_prod(a, lam * b, ctx.tol) - lam * ab), eps, {&a, &b});

        // compatible family from a shared atomic frame
        auto frame = atomic_frame(random_element(desc, rng), rng, ctx.tol);
        const int r = static_cast<int>(frame.size());
        std::vector<int> all(r);
        for (int i = 0; i < r; ++i) all[i] = i;
        Element fa = frame_effect(frame, all, rng);
        Element fb = frame_effect(frame, all, rng);
        Element fc = frame_effect(frame, all, rng);

        // S4: disjointly supported effects annihilate symmetrically
        if (r >= 2) {
            auto left = random_subset(r, rng, true);
            std::vector<int> right;
            for (int i = 0; i < r; ++i)
                if (std::find(left.begin(), left.end(), i) == left.end()) right.push_back(i);
            Element a4 = frame_effect(frame, left, rng);
            Element b4 = frame_effect(frame, right, rng);
            ctx.check("S4-antecedent", order_unit_norm(seq_prod(a4, b4, ctx.tol)), eps,
                      {&a4, &b4});
            ctx.check("S4-symmetry", order_unit_norm(seq_prod(b4, a4, ctx.tol)), eps2,
                      {&a4, &b4});
        }

        // S5 associativity of compatible effects (c arbitrary)
        ctx.check("S5-associativity",
                  order_unit_norm(seq_prod(fa, seq_prod(fb, c, ctx.tol), ctx.tol) -
                                  seq_prod(seq_prod(fa, fb, ctx.tol), c, ctx.tol)),
                  eps2, {&fa, &fb, &c});

        // S6 compatibility with complements and sums
        Element fbp = unit - fb;
        ctx.check("S6-complement", comm_norm(fa, fbp, ctx.tol), eps2, {&fa, &fb});
        Element fsum = 0.5 * fb + 0.5 * fc;
        ctx.check("S6-sum", comm_norm(fa, fsum, ctx.tol), eps2, {&fa, &fb, &fc});

        // S7 multiplicativity, and the weaker derived variant
        Element fbc = seq_prod(fb, fc, ctx.tol);
        ctx.check("S7-multiplicativity", comm_norm(fa, fbc, ctx.tol), eps2, {&fa, &fb, &fc});
        ctx.check("weak-S7-derived", comm_norm(fa, fbc, ctx.tol), eps2, {&fa, &fb, &fc});

        // S2 has no finite test; probe for finiteness of the residual only
        Element an = a + 0.125 * (b - a);
        double resid = order_unit_norm(seq_prod(an, c, ctx.tol) - seq_prod(a, c, ctx.tol));
        ctx.check("S2-probe-finite", std::isfinite(resid) ? 0.0 : 1.0, 0.5, {&a, &b, &c});
    }
}

// --- spectral ----------------------------------------------------------------

void suite_spectral(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const Element unit = Element::unit(desc);
    const double eps = ctx.eps();
    const EffectProfile profiles[] = {EffectProfile::Generic, EffectProfile::Sharp,
                                      EffectProfile::Atomic, EffectProfile::Degenerate,
                                      EffectProfile::Boundary};

    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        Element a = random_effect(desc, rng, profiles[k % 5], ctx.tol);
        SpectralForm form = spectral_decompose(a, ctx.tol, /*keep_zero=*/true);

        ctx.check("spectral-reconstruction", order_unit_norm(form.reconstruct() - a), eps,
                  {&a});
        for (size_t i = 0; i < form.terms.size(); ++i) {
            const Element& p = form.terms[i].idempotent;
            ctx.check("idempotent-sharp", order_unit_norm(jordan_mul(p, p) - p), eps, {&a});
            for (size_t j = i + 1; j < form.terms.size(); ++j) {
                ctx.check("idempotent-orthogonal",
                          order_unit_norm(jordan_mul(p, form.terms[j].idempotent)), eps, {&a});
                ctx.check("cluster-separation",
                          std::max(0.0, ctx.tol.eig_cluster_gap -
                                            (form.terms[j].lambda - form.terms[i].lambda)),
                          0.0, {&a});
            }
        }

        Element s = sqrt_effect(a, ctx.tol);
        ctx.check("sqrt-squares-back", order_unit_norm(jordan_mul(s, s) - a), eps, {&a});
        ctx.check("power-two-is-seq-square",
                  order_unit_norm(power(a, 2, ctx.tol) - seq_prod(a, a, ctx.tol)), eps, {&a});

        Element x = a + 0.25 * unit;
        ctx.check("inverse-law",
                  order_unit_norm(seq_prod(x, inverse(x, ctx.tol), ctx.tol) - unit),
                  10.0 * eps, {&a});

        Element c = ceiling(a, ctx.tol);
        ctx.check("ceiling-sharp", order_unit_norm(seq_prod(c, c, ctx.tol) - c), eps, {&a});
        ctx.check("ceiling-above", std::max(0.0, -min_eigenvalue(c - a)), eps, {&a});
        Element f = floor_sharp(a, ctx.tol);
        ctx.check("floor-below", std::max(0.0, -min_eigenvalue(a - f)), eps, {&a});
        ctx.check("floor-ceiling-duality",
                  order_unit_norm(f - (unit - ceiling(unit - a, ctx.tol))), eps, {&a});

        double lam = 0.1 + 0.9 * uniform01(rng);
        ctx.check("ceiling-scale-invariant",
                  order_unit_norm(ceiling(lam * a, ctx.tol) - c), eps, {&a});

        // minimality: a <= r sharp by construction, so ceil(a) <= r
        Element r_sharp = random_effect(desc, rng, EffectProfile::Sharp, ctx.tol);
        Element below = seq_prod(r_sharp, a, ctx.tol);
        ctx.check("ceiling-minimal",
                  std::max(0.0, -min_eigenvalue(r_sharp - ceiling(below, ctx.tol))),
                  10.0 * eps, {&a, &r_sharp});
    }
}

// --- homogeneity -------------------------------------------------------------

void suite_homogeneity(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const double eps = ctx.eps(10.0);
    const int probes = 50;

    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        Element a = random_effect(desc, rng) + 0.2 * Element::unit(desc);
        Element b = random_effect(desc, rng) + 0.2 * Element::unit(desc);
        HomogeneityIso phi = homogeneity_iso(a, b, ctx.tol);
        ctx.check("iso-maps-a-to-b", order_unit_norm(phi.apply(a) - b), eps, {&a, &b});
        ctx.check("iso-roundtrip", operator_norm(phi.forward * phi.backward -
                                                 Eigen::MatrixXd::Identity(
                                                     desc.dimension(), desc.dimension())),
                  eps, {&a, &b});
        for (int t = 0; t < probes; ++t) {
            Element x = random_effect(desc, rng);
            ctx.check("iso-preserves-positivity",
                      std::max(0.0, -min_eigenvalue(phi.apply(x))), eps, {&a, &b, &x});
            ctx.check("iso-inverse-preserves-positivity",
                      std::max(0.0, -min_eigenvalue(phi.apply_inverse(x))), eps, {&a, &b, &x});
        }
    }
}

// --- lattice -----------------------------------------------------------------

void suite_lattice(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const Element unit = Element::unit(desc);
    const double eps = ctx.eps();
    const double eps2 = 10.0 * eps;
    const int rank = desc.rank();

    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        SharpEffect p(random_effect(desc, rng, EffectProfile::Sharp, ctx.tol), ctx.tol);
        SharpEffect q(random_effect(desc, rng, EffectProfile::Sharp, ctx.tol), ctx.tol);

        SharpEffect j = join(p, q, ctx.tol);
        ctx.check("join-above-left", std::max(0.0, -min_eigenvalue(j.value() - p.value())),
                  eps2, {&p.value(), &q.value()});
        ctx.check("join-above-right", std::max(0.0, -min_eigenvalue(j.value() - q.value())),
                  eps2, {&p.value(), &q.value()});
        SharpEffect mt = meet(p, q, ctx.tol);
        ctx.check("meet-below-left", std::max(0.0, -min_eigenvalue(p.value() - mt.value())),
                  eps2, {&p.value(), &q.value()});
        ctx.check("meet-below-right", std::max(0.0, -min_eigenvalue(q.value() - mt.value())),
                  eps2, {&p.value(), &q.value()});
        ctx.check("join-idempotent", order_unit_norm(join(p, p, ctx.tol).value() - p.value()),
                  eps, {&p.value()});

        // join minimality on a constructed sharp upper bound
        Element e1 = random_effect(desc, rng);
        Element e2 = random_effect(desc, rng);
        SharpEffect under1(ceiling(seq_prod(p.value(), e1, ctx.tol), ctx.tol), ctx.tol);
        SharpEffect under2(ceiling(seq_prod(p.value(), e2, ctx.tol), ctx.tol), ctx.tol);
        ctx.check("join-minimal",
                  std::max(0.0, -min_eigenvalue(p.value() -
                                                join(under1, under2, ctx.tol).value())),
                  eps2, {&p.value()});

        // orthogonality of a sharp effect and its complement
        SharpEffect pc = p.complement(ctx.tol);
        ctx.check("complement-orthogonal", comm_norm(p.value(), pc.value(), ctx.tol), eps,
                  {&p.value()});
        ctx.check("orthogonal-join-is-sum",
                  order_unit_norm(join(p, pc, ctx.tol).value() - unit), eps, {&p.value()});

        // frame-based identities
        auto frame = atomic_frame(random_element(desc, rng), rng, ctx.tol);
        auto sub = random_subset(rank, rng, true);
        std::vector<int> rest;
        for (int i = 0; i < rank; ++i)
            if (std::find(sub.begin(), sub.end(), i) == sub.end()) rest.push_back(i);
        Element fp = frame_effect(frame, sub, rng, /*sharp=*/true);
        Element fa = frame_effect(frame, rest, rng);  // generic, orthogonal to fp

        // b & a = 0 implies b & ceil(a) = 0
        ctx.check("orthogonal-lifts-to-ceiling",
                  order_unit_norm(seq_prod(fp, ceiling(fa, ctx.tol), ctx.tol)), eps2,
                  {&fp, &fa});

        // ceil(p & a) = ceil(p & ceil(a))
        Element g = random_effect(desc, rng);
        Element pg = seq_prod(fp, g, ctx.tol);
        ctx.check("ceiling-through-sharp",
                  order_unit_norm(ceiling(pg, ctx.tol) -
                                  ceiling(seq_prod(fp, ceiling(g, ctx.tol), ctx.tol), ctx.tol)),
                  eps2, {&fp, &g});

        // a <= p iff p & a = a iff p' & a = 0
        ctx.check("below-sharp-fixed", order_unit_norm(seq_prod(fp, pg, ctx.tol) - pg), eps2,
                  {&fp, &g});
        ctx.check("below-sharp-complement-kills",
                  order_unit_norm(seq_prod(unit - fp, pg, ctx.tol)), eps2, {&fp, &g});

        // compatible sharp pair: p & q is sharp and equals the meet
        auto sub2 = random_subset(rank, rng, true);
        Element fq = frame_effect(frame, sub2, rng, /*sharp=*/true);
        SharpEffect sp(fp, ctx.tol), sq(fq, ctx.tol);
        Element pq = seq_prod(fp, fq, ctx.tol);
        ctx.check("compatible-sharp-meet",
                  order_unit_norm(pq - meet(sp, sq, ctx.tol).value()), eps2, {&fp, &fq});

        // q <= p sharp: p - q = p ^ q'
        std::vector<int> subset_of_sub(sub.begin(), sub.begin() + (sub.size() + 1) / 2);
        Element fsub = frame_effect(frame, subset_of_sub, rng, /*sharp=*/true);
        SharpEffect ssub(fsub, ctx.tol);
        ctx.check("sharp-difference-is-meet",
                  order_unit_norm((fp - fsub) -
                                  meet(sp, ssub.complement(ctx.tol), ctx.tol).value()),
                  eps2, {&fp, &fsub});

        // covering property
        SharpEffect atom(random_effect(desc, rng, EffectProfile::Atomic, ctx.tol), ctx.tol);
        try {
            covering_check(p, atom, ctx.tol);
        } catch (const Error&) {
            ctx.check("covering-verdict", 1.0, 0.0, {&p.value(), &atom.value()});
        }

        // rank well-definedness across frames, and orthogonality of atoms
        int n0 = -1;
        for (std::uint64_t fs = 0; fs < 3; ++fs) {
            auto dec = atomic_decomposition(p, ctx.seed + 0xF0 + fs, ctx.tol);
            if (n0 < 0) n0 = static_cast<int>(dec.atoms.size());
            ctx.check("rank-frame-independent",
                      std::abs(static_cast<int>(dec.atoms.size()) - n0), 0.0, {&p.value()});
            Element sum = Element::zero(desc);
            for (const auto& at : dec.atoms) sum += at;
            ctx.check("atoms-sum-to-target", order_unit_norm(sum - p.value()), eps,
                      {&p.value()});
            for (size_t i = 0; i < dec.atoms.size(); ++i)
                for (size_t s2 = i + 1; s2 < dec.atoms.size(); ++s2)
                    ctx.check("atoms-orthogonal",
                              order_unit_norm(jordan_mul(dec.atoms[i], dec.atoms[s2])), eps,
                              {&p.value()});
        }

        // rank monotone on nested frame projections
        ctx.check("rank-monotone",
                  std::max(0, rank_of(ssub, ctx.tol) - rank_of(sp, ctx.tol)), 0.0, {&fp});

        if (k == 0)
            ctx.check("rank-of-unit",
                      std::abs(rank_of(SharpEffect(unit, ctx.tol), ctx.tol) - rank), 0.0, {});

        // rank-2 ideal: effects under a join of two distinct atoms use at
        // most two atoms
        SharpEffect atom2(random_effect(desc, rng, EffectProfile::Atomic, ctx.tol), ctx.tol);
        if (order_unit_norm(atom.value() - atom2.value()) > 1e-3) {
            SharpEffect ideal = join(atom, atom2, ctx.tol);
            Element inside = seq_prod(ideal.value(), random_effect(desc, rng), ctx.tol);
            SpectralForm sf = spectral_decompose(inside, ctx.tol);
            int support = sf.support_rank();
            ctx.check("ideal-rank-two", std::max(0, support - 2), 0.0,
                      {&atom.value(), &atom2.value()});
            if (support == 2) {
                Element total = Element::zero(desc);
                for (const auto& t : sf.terms) total += t.idempotent;
                ctx.check("ideal-atoms-sum-to-join",
                          order_unit_norm(total - ideal.value()), eps2,
                          {&atom.value(), &atom2.value()});
            }
        }
    }
}

// --- duality -----------------------------------------------------------------

void suite_duality(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const double eps = ctx.eps();
    const double eps2 = 10.0 * eps;

    if (ctx.samples > 0) {
        SelfDualForm form = build_self_dual_inner(desc, ctx.seed, ctx.tol);
        Eigen::MatrixXd sym = 0.5 * (form.gram + form.gram.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
        ctx.check("form-positive-definite",
                  std::max(0.0, 1e-8 - es.eigenvalues().minCoeff()), 0.0, {});
        ctx.check("form-symmetric",
                  (form.gram - form.gram.transpose()).cwiseAbs().maxCoeff(), eps2, {});
        // the reference basis is orthonormal, so the Gram must be the identity
        ctx.check("form-matches-reference",
                  (form.gram - Eigen::MatrixXd::Identity(desc.dimension(), desc.dimension()))
                      .cwiseAbs()
                      .maxCoeff(),
                  eps2, {});
    }

    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        SharpEffect p(random_effect(desc, rng, EffectProfile::Atomic, ctx.tol), ctx.tol);
        SharpEffect q(random_effect(desc, rng, EffectProfile::Atomic, ctx.tol), ctx.tol);

        double tpq = transition_probability(p, q, ctx.tol);
        double tqp = transition_probability(q, p, ctx.tol);
        ctx.check("transition-symmetric", std::abs(tpq - tqp), eps,
                  {&p.value(), &q.value()});
        ctx.check("transition-in-range", std::max({0.0, -tpq, tpq - 1.0}), eps,
                  {&p.value(), &q.value()});
        ctx.check("atom-product-law",
                  order_unit_norm(seq_prod(p.value(), q.value(), ctx.tol) - tpq * p.value()),
                  eps, {&p.value(), &q.value()});

        StateFunctional omega = pure_state_of(p, ctx.tol);
        ctx.check("pure-state-normalized", std::abs(omega(p.value()) - 1.0), eps,
                  {&p.value()});
        ctx.check("pure-state-kills-complement",
                  std::abs(omega(Element::unit(desc) - p.value())), eps, {&p.value()});
        Element probe = random_effect(desc, rng);
        ctx.check("pure-state-positive", std::max(0.0, -omega(probe)), eps,
                  {&p.value(), &probe});
        // cross-oracle: the same state via the reference inner product
        Element any = random_element(desc, rng);
        double alt = reference_inner(p.value(), any) / reference_inner(p.value(), p.value());
        ctx.check("pure-state-cross-oracle", std::abs(omega(any) - alt), ctx.eps(order_unit_norm(any)),
                  {&p.value(), &any});

        // orthogonal atoms have zero transition probability
        auto frame = atomic_frame(random_element(desc, rng), rng, ctx.tol);
        SharpEffect f0(frame[0], ctx.tol), f1(frame[1], ctx.tol);
        ctx.check("orthogonal-atoms-zero-transition",
                  std::abs(transition_probability(f0, f1, ctx.tol)), eps,
                  {&frame[0], &frame[1]});

        // self-duality both ways, and <a,a> = sum of squared eigenvalues
        Element a = random_element(desc, rng);
        Rng fr1 = substream(ctx.seed ^ 0xF00D, k);
        Rng fr2 = substream(ctx.seed ^ 0xBEEF, k);
        Element b = random_element(desc, rng);
        double scale = order_unit_norm(a) * std::max(1.0, order_unit_norm(b));
        ctx.check("pairing-frame-independent",
                  std::abs(self_dual_pairing(a, b, fr1, ctx.tol) -
                           self_dual_pairing(a, b, fr2, ctx.tol)),
                  ctx.eps(scale) * 2.0, {&a, &b});
        Rng fr3 = substream(ctx.seed ^ 0xCAFE, k);
        double sum_sq = 0.0;
        SpectralForm sf = spectral_decompose(a, ctx.tol);
        for (const auto& t : sf.terms)
            sum_sq += t.lambda * t.lambda * idempotent_rank(t.idempotent);
        ctx.check("pairing-self-is-eigen-square",
                  std::abs(self_dual_pairing(a, a, fr3, ctx.tol) - sum_sq),
                  ctx.eps(scale * scale), {&a});

        Element pos1 = random_effect(desc, rng);
        Element pos2 = random_effect(desc, rng);
        Rng fr4 = substream(ctx.seed ^ 0xD00D, k);
        ctx.check("positives-pair-nonnegative",
                  std::max(0.0, -self_dual_pairing(pos1, pos2, fr4, ctx.tol)), eps,
                  {&pos1, &pos2});
        // nonnegative pairing against its own frame atoms forces positivity
        bool frame_nonneg = true;
        for (const auto& t : sf.terms) frame_nonneg = frame_nonneg && t.lambda >= -eps;
        ctx.check("nonneg-frame-pairing-is-positive",
                  frame_nonneg == is_positive(a, ctx.tol) ? 0.0 : 1.0, 0.5, {&a});

        // state separation along the difference's own frame
        Element v = random_element(desc, rng);
        Element w = random_element(desc, rng);
        Element d = v - w;
        double best = 0.0;
        Rng fr5 = substream(ctx.seed ^ 0x5E9A, k);
        for (const auto& atom : atomic_frame(d, fr5, ctx.tol)) {
            StateFunctional st = pure_state_of(SharpEffect(atom, ctx.tol), ctx.tol);
            best = std::max(best, std::abs(st(v) - st(w)));
        }
        ctx.check("states-separate",
                  std::max(0.0, order_unit_norm(d) / desc.dimension() - best), eps, {&v, &w});
    }
}

// --- reconstruction ----------------------------------------------------------

void suite_reconstruction(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const Element unit = Element::unit(desc);
    const double eps = ctx.eps();
    const double eps2 = 10.0 * eps;

    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        Element a = random_element(desc, rng);
        Element b = random_element(desc, rng);
        double scale = std::max(1.0, order_unit_norm(a) * order_unit_norm(b));

        Element ab = reconstructed_mul(a, b, ctx.tol, ctx.seed + k);
        ctx.check("reconstructed-equals-canonical",
                  order_unit_norm(ab - jordan_mul(a, b)), eps2 * scale, {&a, &b});
        ctx.check("reconstructed-unit-neutral",
                  order_unit_norm(reconstructed_mul(unit, b, ctx.tol, ctx.seed + k) - b),
                  eps2 * scale, {&b});
        ctx.check("reconstruction-frame-independent",
                  order_unit_norm(ab - reconstructed_mul(a, b, ctx.tol, ctx.seed + k + 77)),
                  2.0 * eps2 * scale, {&a, &b});

        // atoms: idempotence, annihilation, closed product form
        auto frame = atomic_frame(random_element(desc, rng), rng, ctx.tol);
        SharpEffect p(frame[0], ctx.tol);
        SharpEffect po(frame[1], ctx.tol);
        ctx.check("atom-product-idempotent",
                  order_unit_norm(atom_jordan(p, p.value(), ctx.tol) - p.value()), eps,
                  {&p.value()});
        ctx.check("orthogonal-atoms-annihilate",
                  order_unit_norm(atom_jordan(p, po.value(), ctx.tol)), eps,
                  {&p.value(), &po.value()});

        SharpEffect q(random_effect(desc, rng, EffectProfile::Atomic, ctx.tol), ctx.tol);
        if (order_unit_norm(p.value() - q.value()) > 1e-3) {
            Element jpq = join(p, q, ctx.tol).value();
            Element pprime = jpq - p.value();
            double tp = transition_probability(p, q, ctx.tol);
            // restriction law p' & q = p_perp & q
            ctx.check("restriction-law",
                      order_unit_norm(seq_prod(unit - p.value(), q.value(), ctx.tol) -
                                      seq_prod(pprime, q.value(), ctx.tol)),
                      eps2, {&p.value(), &q.value()});
            if (is_atomic(pprime, ctx.tol)) {
                double tprime = transition_probability(SharpEffect(pprime, ctx.tol), q, ctx.tol);
                Element closed = q.value() + tp * p.value() - tprime * pprime;
                ctx.check("atom-product-closed-form",
                          order_unit_norm(2.0 * atom_jordan(p, q.value(), ctx.tol) - closed),
                          eps2, {&p.value(), &q.value()});
            }
        }

        // operator commutation: compatible pairs and the Jordan identity
        std::vector<int> all(frame.size());
        for (size_t i = 0; i < frame.size(); ++i) all[i] = static_cast<int>(i);
        Element fa = frame_effect(frame, all, rng);
        Element fb = frame_effect(frame, all, rng);
        auto rep = verify_t_commutation(fa, fb, ctx.tol);
        ctx.check("compatible-T-commute", rep.commutator_norm, eps2, {&fa, &fb});
        Element sq = jordan_mul(a, a);
        ctx.check("jordan-identity-operator",
                  verify_t_commutation(a, sq, ctx.tol).commutator_norm,
                  eps2 * scale * scale, {&a});

        // symmetry of the product in the reference form
        Element c = random_element(desc, rng);
        double lhs = reference_inner(ab, c);
        Element ac = reconstructed_mul(a, c, ctx.tol, ctx.seed + k);
        double rhs = reference_inner(b, ac);
        double scale3 = scale * std::max(1.0, order_unit_norm(c));
        ctx.check("product-self-adjoint", std::abs(lhs - rhs), eps2 * scale3, {&a, &b, &c});

        // L_a commutes with its adjoint for strictly positive a
        Element spos = random_effect(desc, rng) + 0.2 * unit;
        Eigen::MatrixXd la = left_mult_map(spos, ctx.tol).action;
        ctx.check("left-mult-normal",
                  operator_norm(la * la.transpose() - la.transpose() * la), eps2, {&spos});
    }
}

// --- classical algebras ------------------------------------------------------

void suite_classical(SuiteContext& ctx) {
    const auto& desc = ctx.desc;
    const double eps2 = 10.0 * ctx.eps();
    for (int k = 0; k < ctx.samples; ++k) {
        Rng rng = substream(ctx.seed, static_cast<std::uint64_t>(k));
        Element a = random_effect(desc, rng,
                                  k % 2 ? EffectProfile::Degenerate : EffectProfile::Generic,
                                  ctx.tol);
        auto rep = classical_algebra_check(a, -1, ctx.tol);
        ctx.check("classical-commutative", rep.max_commutator, eps2, {&a});
        ctx.check("classical-associative", rep.max_associator, eps2, {&a});
        ctx.check("classical-dim-bound", std::max(0, rep.gram_rank - rep.dim), 0.0, {&a});
        // The Gram oracle resolves the span dimension only when the nodes are
        // well separated; the conditioning scales with the squared Lagrange
        // products, not the minimum gap.
        SpectralForm sf = spectral_decompose(a, ctx.tol, /*keep_zero=*/true);
        double sep = 1.0;
        for (size_t i = 0; i < sf.terms.size(); ++i) {
            double prod = 1.0;
            for (size_t j = 0; j < sf.terms.size(); ++j)
                if (j != i) prod *= std::abs(sf.terms[i].lambda - sf.terms[j].lambda);
            sep = std::min(sep, prod);
        }
        if (sep > 1e-3)
            ctx.check("classical-dim-matches-gram", std::abs(rep.dim - rep.gram_rank), 0.0,
                      {&a});
    }
}

// --- local tomography ----------------------------------------------------------

void suite_loctom(SuiteContext& ctx) {
    // classification table facts (descriptor independent)
    auto rank4 = simple_ejas_of_rank(4, 30);
    std::vector<int> dims4;
    for (const auto& r : rank4) dims4.push_back(r.dim);
    ctx.check("rank4-dims", dims4 == std::vector<int>{10, 16, 28} ? 0.0 : 1.0, 0.5, {});

    int max9 = 0;
    for (const auto& r : simple_ejas_of_rank(9, 1000)) max9 = std::max(max9, r.dim);
    ctx.check("rank9-max-dim", std::abs(max9 - 153), 0.0, {});

    auto rank1 = simple_ejas_of_rank(1, 10);
    ctx.check("rank1-is-reals", (rank1.size() == 1 && rank1[0].dim == 1) ? 0.0 : 1.0, 0.5, {});

    for (int r = 2; r <= 6; ++r)
        for (const auto& row : simple_ejas_of_rank(r, 4 * r * r)) {
            int expect = -1;
            switch (row.family) {
                case EjaFamily::RealSym: expect = r * (r + 1) / 2; break;
                case EjaFamily::ComplexHerm: expect = r * r; break;
                case EjaFamily::QuatHerm: expect = r * (2 * r - 1); break;
                case EjaFamily::Albert: expect = 27; break;
                case EjaFamily::SpinFactor: expect = row.dim; break;
            }
            ctx.check("table-dim-formula", std::abs(row.dim - expect), 0.0, {});
        }

    auto verdict = [&](const char* d) {
        return is_locally_tomographic_self_composite(AlgebraDescriptor::parse(d)).verdict;
    };
    ctx.check("verdict-complex2", verdict("complex:2") ? 0.0 : 1.0, 0.5, {});
    ctx.check("verdict-complex3", verdict("complex:3") ? 0.0 : 1.0, 0.5, {});
    ctx.check("verdict-complex-sum", verdict("complex:2+complex:3") ? 0.0 : 1.0, 0.5, {});
    ctx.check("verdict-real3", verdict("real:3") ? 1.0 : 0.0, 0.5, {});
    ctx.check("verdict-quat2", verdict("quat:2") ? 1.0 : 0.0, 0.5, {});
    ctx.check("verdict-spin5", verdict("spin:5") ? 1.0 : 0.0, 0.5, {});
    ctx.check("verdict-albert",
              square_composite_exists({EjaFamily::Albert, 3, 27}) ? 1.0 : 0.0, 0.5, {});

    // concrete complex tensor composite
    int tsamples = std::min(ctx.samples, 100);
    if (tsamples > 0) {
        auto rep = explicit_tensor_checks(2, 2, tsamples, ctx.seed, ctx.tol);
        AlgebraDescriptor comp{{{FactorKind::ComplexHerm, 4}}};
        ctx.check("tensor-product-law", rep.max_product_residual,
                  10.0 * eps_for(ctx.tol, comp, 1.0), {});
        ctx.check("tensor-atoms-atomic", rep.atoms_atomic ? 0.0 : 1.0, 0.5, {});
        ctx.check("tensor-classical", rep.classical_tensor_ok ? 0.0 : 1.0, 0.5, {});
        ctx.check("tensor-unit-rank", std::abs(rep.composite_rank - 4), 0.0, {});
        ctx.check("tensor-dim", rep.dim_ok ? 0.0 : 1.0, 0.5, {});
        ctx.check("tensor-overlap-atom", rep.overlap_atom_ok ? 0.0 : 1.0, 0.5, {});
    }

    // atoms in distinct summands annihilate
    if (ctx.desc.factors.size() > 1 && ctx.samples > 0) {
        Rng rng = substream(ctx.seed, 0x10C);
        auto frame = atomic_frame(random_element(ctx.desc, rng), rng, ctx.tol);
        for (size_t i = 0; i < frame.size(); ++i)
            for (size_t j = 0; j < frame.size(); ++j) {
                if (i == j) continue;
                bool same_block = false;
                for (size_t bi = 0; bi < ctx.desc.factors.size(); ++bi) {
                    Element u = Element::unit(ctx.desc);
                    // block support via trace against the block unit
                    Element bu = Element::zero(ctx.desc);
                    bu.blocks()[bi] = u.blocks()[bi];
                    if (reference_inner(frame[i], bu) > 0.5 &&
                        reference_inner(frame[j], bu) > 0.5)
                        same_block = true;
                }
                if (!same_block)
                    ctx.check("cross-summand-atoms-orthogonal",
                              order_unit_norm(seq_prod(frame[i], frame[j], ctx.tol)),
                              ctx.eps(), {&frame[i], &frame[j]});
            }
    }
}

}  // namespace

double continuity_probe(const AlgebraDescriptor& desc, int samples, std::uint64_t seed,
                        const Tolerances& tol) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        Rng rng = substream(seed ^ 0x52ull, static_cast<std::uint64_t>(k));
        Element a = random_effect(desc, rng);
        Element b = random_effect(desc, rng);
        Element target = random_effect(desc, rng);
        Element ab = seq_prod(a, b, tol);
        for (int n = 1; n <= 8; ++n) {
            double delta = std::pow(0.5, n);
            Element an = (1.0 - delta) * a + delta * target;
            double num = order_unit_norm(seq_prod(an, b, tol) - ab);
            double den = std::sqrt(order_unit_norm(an - a)) *
                         std::max(order_unit_norm(b), 1e-12);
            if (den > 0.0) worst = std::max(worst, num / den);
        }
    }
    return worst;
}

const std::vector<SuiteSpec>& suite_catalog() {
    static const std::vector<SuiteSpec> catalog = {
        {"axioms", suite_axioms},
        {"spectral", suite_spectral},
        {"homogeneity", suite_homogeneity},
        {"lattice", suite_lattice},
        {"duality", suite_duality},
        {"reconstruction", suite_reconstruction},
        {"classical", suite_classical},
        {"loctom", suite_loctom},
    };
    return catalog;
}

VerificationReport run_suite(const std::string& name, const AlgebraDescriptor& desc,
                             int samples, std::uint64_t seed, const Tolerances& tol) {
    const SuiteSpec* spec = nullptr;
    for (const auto& s : suite_catalog())
        if (s.name == name) spec = &s;
    if (!spec) throw Error("unknown suite '" + name + "'");

    VerificationReport rep;
    rep.suite = name;
    rep.algebra = desc.to_string();
    rep.seed = seed;
    rep.samples = samples;
    auto t0 = std::chrono::steady_clock::now();
    SuiteContext ctx{desc, samples, seed, tol, &rep.failures};
    spec->run(ctx);
    rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.pass = rep.failures.empty();
    return rep;
}

std::vector<VerificationReport> run_all(const std::vector<AlgebraDescriptor>& descs,
                                        int samples, std::uint64_t seed,
                                        const Tolerances& tol) {
    std::vector<VerificationReport> reports;
    for (const auto& d : descs)
        for (const auto& s : suite_catalog())
            reports.push_back(run_suite(s.name, d, samples, seed, tol));
    return reports;
}

std::vector<AlgebraDescriptor> default_zoo() {
    std::vector<AlgebraDescriptor> zoo;
    for (const char* s : {"real:2", "real:3", "complex:2", "complex:3", "quat:2", "spin:3",
                          "spin:5", "complex:2+spin:3"})
        zoo.push_back(AlgebraDescriptor::parse(s));
    return zoo;
}

}  // namespace sps
