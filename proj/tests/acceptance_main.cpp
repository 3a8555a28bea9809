// Acceptance gate: runs every paper target and prints one line per
// criterion; exits nonzero if any fails.
#include <algorithm>
#include <cstdio>

#include "tcent/acceptance.hpp"

int main() {
  auto results = tcent::accept::run_all(1);
  bool all_pass = true;
  for (const auto& r : results) {
    std::puts(tcent::accept::format_line(r).c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%zu/%zu acceptance criteria passed\n",
              static_cast<std::size_t>(
                  std::count_if(results.begin(), results.end(),
                                [](const auto& r) { return r.pass; })),
              results.size());
  return all_pass ? 0 : 1;
}
