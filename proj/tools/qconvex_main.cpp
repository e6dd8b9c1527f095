#include "qconvex/cli.hpp"

int main(int argc, char** argv) { return qconvex::cli::run(argc, argv); }
