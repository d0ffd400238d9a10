#include "cli.hpp"

int main(int argc, char** argv) { return bentlab::cli::run(argc, argv); }
