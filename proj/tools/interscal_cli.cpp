#include "interscal/cli.hpp"

int main(int argc, char** argv) { return interscal::cli_main(argc, argv); }
