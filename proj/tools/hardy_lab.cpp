#include "hardylab/cli.hpp"

int main(int argc, char** argv) { return hardylab::cli::run(argc, argv); }
