#include "ils/cli.hpp"

int main(int argc, char** argv) { return ils::run_cli(argc, argv); }
