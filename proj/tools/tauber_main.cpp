#include "tauber/cli.hpp"

int main(int argc, char** argv) { return tauber::run_cli(argc, argv); }
