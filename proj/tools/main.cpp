#include <iostream>
#include <string>
#include <vector>

#include "lseries/cli.hpp"

int main(int argc, char **argv)
{
	return lseries::cli::run(std::vector<std::string>(argv + 1, argv + argc),
	                         std::cout, std::cerr);
}
