#include "qconv/cli.hpp"

int main(int argc, char** argv) { return qconv::cli::main_entry(argc, argv); }
