#include <string>
#include <vector>

#include "plwe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return plwe::cli_dispatch(args);
}
