#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto const result = wordlab::cli::dispatch(args);
  if (result.raw) {
    std::cout << *result.raw;
  } else if (!result.payload.is_null()) {
    std::cout << result.payload.dump(2) << '\n';
  }
  if (!result.diagnostics.empty()) {
    std::cerr << result.diagnostics << '\n';
  }
  return result.exit_code();
}
