#include <string>
#include <vector>

#include "srg/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srg::cli_run(args);
}
