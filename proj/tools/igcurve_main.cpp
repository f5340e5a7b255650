#include <iostream>

#include "igcurve/cli.hpp"

int main(int argc, char** argv) { return igcurve::cli::run(argc, argv, std::cout, std::cerr); }
