#include "illusion/cli.hpp"

int main(int argc, char** argv) { return illusion::cli::run(argc, argv); }
