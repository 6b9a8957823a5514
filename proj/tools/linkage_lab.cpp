#include "cli.hpp"

int main(int argc, char** argv) { return linkage_lab::cli::run(argc, argv); }
