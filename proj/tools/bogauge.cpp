#include "bogauge/experiments.hpp"

int main(int argc, char** argv) { return bogauge::cli_main(argc, argv); }
