#include "arclift/cli.hpp"

int main(int argc, char** argv) { return arclift::cli::main(argc, argv); }
