#include <iostream>

#include "cstat/cli.hpp"

int main(int argc, char** argv) {
  return cstat::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
