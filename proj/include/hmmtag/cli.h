// cli.h --- the hmmtag command-line front end.

#ifndef HMMTAG_CLI_H_
#define HMMTAG_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hmmtag {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitDecode = 3,
};

// Runs one subcommand. `args` excludes the program name.
int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err);

}  // namespace hmmtag

#endif  // HMMTAG_CLI_H_
