#pragma once

#include <string>

#include <json.hpp>

#include "tauber/models.hpp"
#include "tauber/report.hpp"

namespace tauber {

// A problem file bundles a model with optional verification settings.
// Rational values are JSON strings ("3/4") or integers; unknown fields are
// rejected so typos cannot silently change a run.
struct Problem {
    Model model;
    VerifyOptions options;
};

Problem parse_problem_json(const nlohmann::json& j);
Problem parse_problem_text(const std::string& text);
Problem load_problem_file(const std::string& path);

}  // namespace tauber
