#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "carpetcalc/cli.hpp"

int main(int argc, char **argv)
{
	const std::vector<std::string> args(argv + 1, argv + argc);
	const bool color = carpetcalc::cli::color_enabled(std::getenv("CARPETCALC_NO_COLOR"), isatty(STDOUT_FILENO));
	return carpetcalc::cli::run(args, std::cout, std::cerr, color);
}
