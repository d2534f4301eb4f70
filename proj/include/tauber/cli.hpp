#pragma once

namespace tauber {

// Full command-line entry point.  Returns the process exit code:
//   0  success / all checks passed
//   1  a verification check failed
//   2  malformed input (CLI arguments, problem files, unknown ids)
//   3  precondition violation (admissible data, order/window constraints)
// The environment variable TAUBER_PRECISION overrides the default working
// precision in bits.
int run_cli(int argc, const char* const* argv);

}  // namespace tauber
