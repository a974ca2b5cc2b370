#include <iostream>

#include "strans/cli.hpp"

int main(int argc, char** argv) {
  return strans::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
