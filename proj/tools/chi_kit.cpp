#include "chikit/cli/run.hpp"

int main(int argc, char** argv) { return chikit::cli::run(argc, argv); }
