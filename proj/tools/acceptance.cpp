// Runs every acceptance criterion and prints one line per criterion.
// --verbose also lists the individual checks.
#include <bethenorm/acceptance.hpp>

#include <cstdio>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "--verbose") == 0;
  bool ok = true;
  for (const auto& criterion : bethenorm::acceptance::all_criteria()) {
    const auto c = criterion();
    ok = ok && c.pass();
    std::printf("criterion %d: %s  %s  (%.1f s)\n", c.id, c.pass() ? "PASS" : "FAIL", c.title.c_str(),
                c.elapsed_ms / 1000.0);
    for (const auto& ch : c.checks) {
      if (!verbose && ch.status == bethenorm::Status::pass) continue;
      std::printf("    [%s] %s: %s vs %s (tol %s) %s\n", bethenorm::to_string(ch.status), ch.name.c_str(),
                  ch.lhs.c_str(), ch.rhs.c_str(), ch.tolerance.c_str(), ch.note.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%s\n", ok ? "ALL PASS" : "FAILURES");
  return ok ? 0 : 1;
}
