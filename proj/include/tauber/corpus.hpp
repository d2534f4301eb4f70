#pragma once

#include <string>
#include <vector>

#include "tauber/models.hpp"
#include "tauber/report.hpp"

namespace tauber {

// Built-in model corpus.  Each entry carries exact data and is solvable by
// both coefficient oracles, so a full verification sweep can run with no
// external input.  Ids are stable; order is the run order.
const std::vector<Model>& builtin_corpus();

// Lookup by id; throws ParseError for unknown ids.
const Model& corpus_model(const std::string& id);

// Verify every corpus model with the same options.  Shared by the CLI
// corpus runner and the acceptance harness.
std::vector<VerificationReport> run_corpus_sweep(const VerifyOptions& opt);

}  // namespace tauber
