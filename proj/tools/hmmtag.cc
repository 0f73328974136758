// hmmtag --- train, apply and evaluate HMM part-of-speech taggers.

#include <iostream>
#include <string>
#include <vector>

#include "hmmtag/cli.h"

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return hmmtag::RunCli(args, std::cin, std::cout, std::cerr);
}
