#include "bihom/cli.hpp"

int main(int argc, char** argv) { return bihom::cli_main(argc, argv); }
