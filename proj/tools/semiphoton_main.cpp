#include "semiphoton/cli.hpp"

int main(int argc, char** argv) { return semiphoton::cli::run(argc, argv); }
