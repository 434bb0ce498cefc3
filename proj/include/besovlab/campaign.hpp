#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "besovlab/cns.hpp"
#include "besovlab/paraproduct.hpp"
#include "besovlab/recipes.hpp"

namespace besovlab {

// Campaign configuration. Exponent fields default to NaN, meaning "use the
// checker's own default"; every checker validates the resolved values up
// front and rejects hypothesis-violating combinations naming the condition.
struct CampaignConfig {
    int grid = 64;   // points per axis at the base scale
    int dim = 2;
    std::uint64_t seed = 1;
    int trials = 20;
    double drift_bound = 0.15;

    double s = nan_value();
    double s1 = nan_value();
    double s2 = nan_value();
    double p = nan_value();
    double q = nan_value();
    double eps = nan_value();
    double horizon = nan_value(); // T for time-dependent checkers
    double dt = nan_value();
    double weight_rate = 1.0;     // c in the parabolic weights

    static double nan_value();
};

// Aggregated inequality-ratio study. Every trial is evaluated at two dyadic
// scales (the base fields and their one-octave rescaling, with time horizons
// divided by four for evolution problems); the rescaled ratio is multiplied
// by 2^{gauge} -- the exact scaling exponent of the inequality on the torus
// -- so a scale-robust constant gives matching values at both scales.
struct RatioReport {
    std::string lemma;
    nlohmann::json params;          // full hypothesis echo
    int trials = 0;
    std::vector<double> ratios;         // base-scale ratio per trial
    std::vector<double> shifted_ratios; // gauge-corrected rescaled ratios
    double max_ratio = 0.0;
    double scale_drift = 0.0;       // max relative change across scales
    double drift_bound = 0.15;
    bool verdict = false;

    nlohmann::json to_json() const;
};

// Registered campaign identifiers, sorted.
std::vector<std::string> campaign_list();

// Runs the named campaign. Throws std::invalid_argument for an unknown id or
// a configuration violating the hypotheses of the inequality under study.
RatioReport run_campaign(const std::string& lemma, const CampaignConfig& cfg);

} // namespace besovlab
