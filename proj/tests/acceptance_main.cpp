#include <iostream>

#include "bocalc/suite.hpp"

int main() {
  const auto results = bocalc::suite::run_acceptance();
  for (const auto& r : results)
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail << "\n";
  return bocalc::suite::all_passed(results) ? 0 : 1;
}
