// galois_acceptance [--data DIR] [--long] [criterion ...]
// One line per criterion; exit status 0 only when every selected one passes.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>

#include "galois/suites.hpp"

int main(int argc, char** argv) {
  galois::suites::Context ctx;
  ctx.data_dir = "acceptance-data";
  bool include_long = false;
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--data" && i + 1 < argc)
      ctx.data_dir = argv[++i];
    else if (a == "--long")
      include_long = true;
    else
      wanted.insert(std::atoi(a.c_str()));
  }
  std::filesystem::create_directories(ctx.data_dir);

  bool all = true;
  for (const auto& s : galois::suites::all_suites()) {
    if (!wanted.empty() && !wanted.count(s.criterion)) continue;
    if (s.long_running && !include_long) continue;
    galois::suites::Outcome o;
    try {
      o = s.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << s.criterion << " (" << s.name << "): " << (o.pass ? "PASS" : "FAIL") << "  "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
