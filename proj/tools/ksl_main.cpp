#include "ksl/cli.hpp"

int main(int argc, char** argv) { return ksl::cli::run(argc, argv); }
