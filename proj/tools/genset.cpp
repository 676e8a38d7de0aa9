#include "genset/cli.hpp"

int main(int argc, char** argv) { return genset::cli::run(argc, argv); }
