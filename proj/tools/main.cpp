#include <iostream>

#include "workbench/workbench.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wb::run(args, std::cout, std::cerr);
}
