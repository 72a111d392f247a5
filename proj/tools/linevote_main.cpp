#include <iostream>
#include <string>
#include <vector>

#include "linevote/cli_io.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linevote::run_cli(args, std::cout, std::cerr);
}
