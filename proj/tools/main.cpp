#include <iostream>
#include <string>
#include <vector>

#include "hopfkit/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfkit::run_command(args, std::cout, std::cerr);
}
