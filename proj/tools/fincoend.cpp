#include "fincoend/cli.hpp"

int main(int argc, char** argv) { return fincoend::cli::run(argc, argv); }
