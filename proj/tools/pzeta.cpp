#include "pz/cli.hpp"

int main(int argc, char** argv) { return pz::run_cli(argc, argv); }
