#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tauber/engine.hpp"
#include "tauber/models.hpp"
#include "tauber/oracle.hpp"

namespace tauber {

struct VerifyOptions {
    int K = 3;
    long nmax = 2000;
    mpfr_prec_t precision = 256;
    // Cauchy-circle cross-check of the two coefficient oracles.
    bool numeric_check = true;
    long numeric_nmax = 100;
    long numeric_points = 4096;
    Rational numeric_rho = rat(1, 2);
    mpfr_prec_t numeric_precision = 256;
    // Tolerances (pinned; acceptance uses these same values).
    double slope_margin = 0.15;
    double ratio_margin = 0.02;
    double constant_rel_tol = 1e-8;
    double numeric_rel_tol = 1e-12;
    long slope_nmin = 64;
    int sample_count = 48;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ResidualRow {
    long n = 0;  // raw coefficient index
    std::string reference;
    std::string predicted;
    std::string residual;
};

struct VerificationReport {
    std::string model_id;
    std::string description;
    std::string mode;  // "exact" or "float"
    int K = 0;
    long nmax = 0;
    mpfr_prec_t precision = 0;
    std::vector<CheckResult> checks;
    std::vector<ResidualRow> rows;
    std::vector<std::string> notes;
    std::vector<std::string> declared;
    std::optional<double> measured_slope;
    std::optional<double> expected_slope;
    std::optional<double> measured_ratio;
    std::optional<double> declared_ratio;
    nlohmann::ordered_json expansion_json;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Run every applicable check of a model's expansion against its oracles.
VerificationReport verify_model(const Model& model, const VerifyOptions& opt);

// Renderings.
nlohmann::ordered_json expansion_to_json(const ExpansionVariant& ev, mpfr_prec_t prec);
std::string expansion_to_text(const ExpansionVariant& ev, mpfr_prec_t prec);
std::string expansion_to_csv(const ExpansionVariant& ev, mpfr_prec_t prec);
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace tauber
