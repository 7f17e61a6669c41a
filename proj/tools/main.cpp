#include "zenolab_cli.hpp"

int main(int argc, char** argv) { return zenolab::cli::run(argc, argv); }
