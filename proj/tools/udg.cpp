#include "udg/cli.hpp"

int main(int argc, char** argv) { return udg::cli::run(argc, argv); }
