#include "sgqw/cli.hpp"

int main(int argc, char** argv) { return sgqw::run_cli(argc, argv); }
