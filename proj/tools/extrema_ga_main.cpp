#include "extrema_ga/cli.hpp"

int main(int argc, char** argv) { return ega::cli::main(argc, argv); }
