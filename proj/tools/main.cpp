#include <iostream>
#include <string>
#include <vector>

#include "locbez/cli.hpp"

int main(int argc, char** argv) {
  return locbez::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
