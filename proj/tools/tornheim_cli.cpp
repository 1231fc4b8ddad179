#include "tornheim/cli.hpp"

int main(int argc, char** argv) { return tornheim::cli_main(argc, argv); }
