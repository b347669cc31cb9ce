#include "cli.hpp"

int main(int argc, char** argv) { return cfmix::cli::run(argc, argv); }
