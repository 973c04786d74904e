#include <iostream>
#include <string>
#include <vector>

#include "sflow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sflow::cli::run(args, std::cout).exit_code();
}
