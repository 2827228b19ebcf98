#include "pdpm/cli.hpp"

int main(int argc, char** argv) { return pdpm::cli::run(argc, argv); }
