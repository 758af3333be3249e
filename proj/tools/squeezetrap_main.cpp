#include "squeezetrap/commands.hpp"

int main(int argc, char** argv) { return squeezetrap::run_cli(argc, argv); }
