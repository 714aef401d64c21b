#include "mistqueue/cli.hpp"

int main(int argc, char** argv) { return mistqueue::cli::run_main(argc, argv); }
