#include <iostream>
#include <string>
#include <vector>

#include <hirzebruch/cli.hpp>

int main(int argc, char** argv) {
  return hirzebruch::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
