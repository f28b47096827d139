#include "brackets/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return brackets::cli::dispatch(args, std::cout, std::cerr, std::cin);
}
