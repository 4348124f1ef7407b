#include "cli/app.hpp"

int main(int argc, char** argv) { return variform::cli::main(argc, argv); }
