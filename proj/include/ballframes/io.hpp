#pragma once

#include <string>

#include "ballframes/frames.hpp"

namespace ballframes {

/// One experiment's full parameter set.  Everything lives in the config file;
/// there is no environment-variable configuration.
struct ExperimentConfig {
    int n = 1;
    double sigma = 3.0;
    double alpha = 0.0;
    double p = 2.0;
    double epsilon = 0.1;
    double box_radius = 1.5;
    int K = 8;
    int quad_radial = 0;  // 0 = derive from K
    int quad_phase = 0;
    int quad_modulus = 0;
    bool atom_is_psi = true;
    std::vector<MonomialTerm> atom_terms; // used when atom_is_psi is false
    std::uint64_t seed = 1;
    std::string out_dir = "out";

    /// Throws ConfigError with a field-level message on the first violation.
    void validate() const;

    FrameParams frame_params() const { return FrameParams(n, sigma, alpha, p); }
    QuadratureRule make_rule() const;
    /// Effective orders after applying the K-derived defaults.
    void effective_orders(int& radial, int& phase, int& modulus) const;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& c);

/// Function files: {"n": ..., "terms": [{"gamma": [...], "coef": [re, im]}]}.
HoloFunction parse_function(const std::string& json_text);
HoloFunction load_function(const std::string& path);
std::string function_to_json(const HoloFunction& f);

/// Deterministic artifact serialization: fixed key order, floats rendered
/// with 17 significant digits, so identical inputs give bit-identical files.
std::string family_to_json(const PointFamily& family);
PointFamily family_from_json(const std::string& json_text);

std::string coefficients_to_json(const CoefficientSeq& c);

struct VerifyItem {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

/// Runs the cross-module invariant battery at the configured parameters.
VerifyReport run_verification(const ExperimentConfig& config);
std::string verify_report_to_json(const VerifyReport& r);

/// 17-significant-digit float rendering used by all artifact writers.
std::string fmt17(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace ballframes
