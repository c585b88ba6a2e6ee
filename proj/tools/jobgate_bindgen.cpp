#include "jobgate/bindgen/cli.hpp"

int main(int argc, char** argv) { return jobgate::bindgen::run_cli(argc, argv); }
