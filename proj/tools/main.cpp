#include "cli.hpp"

int main(int argc, char** argv) { return korbit_cli::run_cli(argc, argv); }
