#include "qkac/cli.hpp"

int main(int argc, char** argv) { return qkac::cli::main_entry(argc, argv); }
