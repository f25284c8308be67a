#pragma once

#include "sps/algebra.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace sps {

struct Failure {
    std::string predicate;
    std::string inputs;  // hex-float coordinates of the witnesses
    double violation;
};

struct VerificationReport {
    std::string suite;
    std::string algebra;
    std::uint64_t seed = 0;
    int samples = 0;
    bool pass = true;
    std::vector<Failure> failures;
    double elapsed_s = 0.0;

    nlohmann::ordered_json to_json() const;
};

/// Per-suite execution context handed to suite bodies; check() appends a
/// failure when the violation exceeds its limit.
struct SuiteContext {
    AlgebraDescriptor desc;
    int samples;
    std::uint64_t seed;
    Tolerances tol;
    std::vector<Failure>* failures;

    void check(const std::string& predicate, double violation, double limit,
               const std::vector<const Element*>& witnesses = {});
    /// eq_tol-scaled limit for this algebra.
    double eps(double scale = 1.0) const;
};

struct SuiteSpec {
    std::string name;
    std::function<void(SuiteContext&)> run;
};

const std::vector<SuiteSpec>& suite_catalog();

VerificationReport run_suite(const std::string& name, const AlgebraDescriptor& desc,
                             int samples, std::uint64_t seed, const Tolerances& tol = {});

std::vector<VerificationReport> run_all(const std::vector<AlgebraDescriptor>& descs,
                                        int samples, std::uint64_t seed,
                                        const Tolerances& tol = {});

std::vector<AlgebraDescriptor> default_zoo();

/// Empirical Hoelder-1/2 constant of a -> a & b along seeded shrinking
/// perturbations; reported, never asserted.
double continuity_probe(const AlgebraDescriptor& desc, int samples, std::uint64_t seed,
                        const Tolerances& tol = {});

std::string hex_coords(const Element& e);

}  // namespace sps
