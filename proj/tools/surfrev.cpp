#include "surfrev/cli.hpp"

int main(int argc, char** argv) { return surfrev::cli::run(argc, argv); }
