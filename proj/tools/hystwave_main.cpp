#include "hystwave/cli.hpp"

int main(int argc, char** argv) { return hystwave::run_cli(argc, argv); }
