#include <iostream>
#include <string>
#include <vector>

#include "pshua/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pshua::command_suite(args, std::cout, std::cerr);
}
