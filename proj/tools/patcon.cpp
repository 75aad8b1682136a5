#include "patcon_cli.hpp"

int main(int argc, char** argv) { return patcon::cli::run(argc, argv); }
