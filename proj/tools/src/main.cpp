#include "fsg_cli/cli.hpp"

int main(int argc, char** argv) { return fsg::cli::cli_dispatch(argc, argv); }
