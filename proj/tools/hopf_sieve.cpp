#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hopf/cli.hpp"
#include "hopf/errors.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* env = std::getenv("HOPF_SIEVE_COLOR");
  hopf::RunOptions opts;
  opts.color = isatty(STDOUT_FILENO) && !(env && std::strcmp(env, "0") == 0);
  try {
    const hopf::Report r = hopf::run_command(args, opts);
    (r.exit_code == 2 ? std::cerr : std::cout) << r.body;
    return r.exit_code;
  } catch (const hopf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
