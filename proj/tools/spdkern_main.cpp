#include "spdkern/io.hpp"

int main(int argc, char** argv) { return spdkern::run_cli(argc, argv); }
