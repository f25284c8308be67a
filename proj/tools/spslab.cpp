// spslab: command-line front end for the sequential-product-space laboratory.
#include "sps/duality.hpp"
#include "sps/lattice.hpp"
#include "sps/loctom.hpp"
#include "sps/reconstruct.hpp"
#include "sps/seqprod.hpp"
#include "sps/spectral.hpp"
#include "sps/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

using nlohmann::ordered_json;
using namespace sps;

namespace {

struct CommonOpts {
    std::string algebra;
    int samples = 100;
    std::uint64_t seed = 0;
    std::vector<std::string> tol_kv;
    std::string format = "text";
};

void add_common(CLI::App* app, CommonOpts& o, bool algebra_required) {
    auto* alg = app->add_option("--algebra", o.algebra,
                                "algebra descriptor, e.g. complex:2+spin:3");
    if (algebra_required) alg->required();
    app->add_option("--samples", o.samples, "number of random samples")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--seed", o.seed, "rng seed");
    app->add_option("--tol", o.tol_kv,
                    "tolerance overrides: eq_tol=..., eig_cluster_gap=..., zero_cutoff=...");
    app->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

Tolerances parse_tol(const std::vector<std::string>& kvs) {
    Tolerances tol;
    for (const auto& kv : kvs) {
        auto pos = kv.find('=');
        if (pos == std::string::npos) throw Error("bad --tol entry '" + kv + "'");
        std::string key = kv.substr(0, pos);
        double val = std::stod(kv.substr(pos + 1));
        if (key == "eq_tol")
            tol.eq_tol = val;
        else if (key == "eig_cluster_gap")
            tol.eig_cluster_gap = val;
        else if (key == "zero_cutoff")
            tol.zero_cutoff = val;
        else
            throw Error("unknown tolerance '" + key + "'");
    }
    return tol;
}

void print_report_text(const VerificationReport& r) {
    std::printf("%-16s %-20s %8d %6s %8.3fs\n", r.suite.c_str(), r.algebra.c_str(),
                r.samples, r.pass ? "pass" : "FAIL", r.elapsed_s);
    for (const auto& f : r.failures)
        std::printf("    %-40s violation=%.3e\n", f.predicate.c_str(), f.violation);
}

int cmd_verify(const CommonOpts& o) {
    Tolerances tol = parse_tol(o.tol_kv);
    std::vector<AlgebraDescriptor> zoo =
        o.algebra.empty() ? default_zoo()
                          : std::vector<AlgebraDescriptor>{AlgebraDescriptor::parse(o.algebra)};
    auto reports = run_all(zoo, o.samples, o.seed, tol);
    bool all_pass = true;
    if (o.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& r : reports) out.push_back(r.to_json());
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%-16s %-20s %8s %6s %9s\n", "suite", "algebra", "samples", "pass",
                    "elapsed");
        for (const auto& r : reports) print_report_text(r);
    }
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    return all_pass ? 0 : 1;
}

int cmd_spectral(const CommonOpts& o) {
    Tolerances tol = parse_tol(o.tol_kv);
    AlgebraDescriptor desc = AlgebraDescriptor::parse(o.algebra);
    Rng rng = substream(o.seed, 0);
    Element a = random_effect(desc, rng, EffectProfile::Generic, tol);
    SpectralForm form = spectral_decompose(a, tol, /*keep_zero=*/true);
    double resid = order_unit_norm(form.reconstruct() - a);
    bool ok = resid <= eps_for(tol, desc);
    if (o.format == "json") {
        ordered_json out;
        out["algebra"] = desc.to_string();
        out["seed"] = o.seed;
        out["terms"] = ordered_json::array();
        for (const auto& t : form.terms) {
            ordered_json jt;
            jt["lambda"] = t.lambda;
            jt["rank"] = idempotent_rank(t.idempotent);
            out["terms"].push_back(std::move(jt));
        }
        out["reconstruction_residual"] = resid;
        out["pass"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("algebra %s  seed %llu\n", desc.to_string().c_str(),
                    static_cast<unsigned long long>(o.seed));
        std::printf("%12s %6s\n", "eigenvalue", "rank");
        for (const auto& t : form.terms)
            std::printf("%12.8f %6d\n", t.lambda, idempotent_rank(t.idempotent));
        std::printf("reconstruction residual %.3e  %s\n", resid, ok ? "pass" : "FAIL");
    }
    return ok ? 0 : 1;
}

int cmd_lattice(const CommonOpts& o) {
    Tolerances tol = parse_tol(o.tol_kv);
    AlgebraDescriptor desc = AlgebraDescriptor::parse(o.algebra);
    auto rep = run_suite("lattice", desc, o.samples, o.seed, tol);
    if (o.format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else {
        std::printf("%-16s %-20s %8s %6s %9s\n", "suite", "algebra", "samples", "pass",
                    "elapsed");
        print_report_text(rep);
    }
    return rep.pass ? 0 : 1;
}

int cmd_reconstruct(const CommonOpts& o) {
    Tolerances tol = parse_tol(o.tol_kv);
    AlgebraDescriptor desc = AlgebraDescriptor::parse(o.algebra);
    auto rep = run_suite("reconstruction", desc, o.samples, o.seed, tol);
    if (o.format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else {
        std::printf("%-16s %-20s %8s %6s %9s\n", "suite", "algebra", "samples", "pass",
                    "elapsed");
        print_report_text(rep);
    }
    return rep.pass ? 0 : 1;
}

int cmd_loctom(const CommonOpts& o) {
    AlgebraDescriptor desc = AlgebraDescriptor::parse(o.algebra);
    auto rep = is_locally_tomographic_self_composite(desc);
    if (o.format == "json") {
        ordered_json out;
        out["algebra"] = desc.to_string();
        out["verdict"] = rep.verdict;
        out["summands"] = ordered_json::array();
        for (const auto& s : rep.summands) {
            ordered_json js;
            js["rank"] = s.rank;
            js["dim"] = s.dim;
            js["rank_sq"] = s.rank_sq;
            js["dim_sq"] = s.dim_sq;
            js["ok"] = s.ok;
            out["summands"].push_back(std::move(js));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("algebra %s\n", desc.to_string().c_str());
        std::printf("%6s %6s %10s %10s %6s\n", "rank", "dim", "rank^2", "dim^2", "ok");
        for (const auto& s : rep.summands)
            std::printf("%6d %6d %10lld %10lld %6s\n", s.rank, s.dim, s.rank_sq, s.dim_sq,
                        s.ok ? "yes" : "no");
        std::printf("verdict: %s\n", rep.verdict ? "locally tomographic" : "not locally tomographic");
    }
    return rep.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for sequential product spaces"};
    app.require_subcommand(1);

    CommonOpts ov, os, ol, orc, olt;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, ov, /*algebra_required=*/false);
    auto* spectral = app.add_subcommand("spectral", "spectral decomposition of a sample");
    add_common(spectral, os, true);
    auto* lattice = app.add_subcommand("lattice", "sharp-effect lattice checks");
    add_common(lattice, ol, true);
    auto* reconstruct = app.add_subcommand("reconstruct", "Jordan product reconstruction checks");
    add_common(reconstruct, orc, true);
    auto* loctom = app.add_subcommand("loctom", "local tomography classification verdict");
    add_common(loctom, olt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(ov);
        if (spectral->parsed()) return cmd_spectral(os);
        if (lattice->parsed()) return cmd_lattice(ol);
        if (reconstruct->parsed()) return cmd_reconstruct(orc);
        if (loctom->parsed()) return cmd_loctom(olt);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
