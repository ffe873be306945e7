#include <iostream>
#include <string>
#include <vector>

#include "spinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = spinv::cli::run(args, std::cin);
  if (!outcome.text.empty()) std::cout << outcome.text;
  if (!outcome.payload.is_null()) std::cout << outcome.payload.dump(2) << '\n';
  if (!outcome.diagnostics.empty()) std::cerr << "spinv: " << outcome.diagnostics << '\n';
  return outcome.exit_code;
}
