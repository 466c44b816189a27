#include <string>
#include <vector>

#include "qlin/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qlin::cli::run(args);
}
