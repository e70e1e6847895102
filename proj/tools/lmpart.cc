/*******************************************************************************
 * lmpart command-line tool.
 *
 * @file:   lmpart.cc
 ******************************************************************************/
#include <iostream>
#include <string>
#include <vector>

#include "commands.h"

int main(int argc, char *argv[]) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return lmpart::cli::run(args, std::cout, std::cerr);
}
