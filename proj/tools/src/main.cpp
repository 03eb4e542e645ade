#include "th_cli/commands.hpp"

int main(int argc, char** argv) { return th::cli::run(argc, argv); }
