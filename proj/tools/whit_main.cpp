#include "whit/cli.hpp"

int main(int argc, char** argv) { return whit::cli_run(argc, argv); }
