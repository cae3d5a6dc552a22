#include <gtest/gtest.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "support.hpp"

// Accepts --seed=N or --seed N (after gtest strips its own flags); the
// NOVIKOV_SEED environment variable is used when no flag is given.
int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (const char* s = std::getenv("NOVIKOV_SEED")) novikov::test_support::seed() = std::stoull(s);
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--seed=", 0) == 0) novikov::test_support::seed() = std::stoull(a.substr(7));
    else if (a == "--seed" && i + 1 < argc) novikov::test_support::seed() = std::stoull(argv[++i]);
  }
  std::cout << "seed " << novikov::test_support::seed() << "\n";
  return RUN_ALL_TESTS();
}
