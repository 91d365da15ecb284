#include "galois/cli.hpp"

int main(int argc, char** argv) { return galois::cli::run_command(argc, argv); }
