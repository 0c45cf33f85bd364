#include "lwd/cli/cli.hpp"

int main(int argc, char** argv) { return lwd::cli::run_cli(argc, argv); }
