#include "pyro/cli.hpp"

int main(int argc, char** argv) { return pyro::cli_dispatch(argc, argv); }
