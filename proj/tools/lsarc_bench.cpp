#include "lsarc/cli.hpp"

int main(int argc, char** argv) { return lsarc::run_cli(argc, argv); }
