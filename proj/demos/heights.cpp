// Prints the Fitting-type heights of a few corpus groups.

#include <iomanip>
#include <iostream>
#include <string>

#include "fgh/heights.hpp"
#include "fgh/lab/corpus.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> names{"S3", "S4", "SL(2,3)", "C2wrC3", "A5", "S5", "C2xA5", "PSL(2,7)"};
  if (argc > 1) names.assign(argv + 1, argv + argc);
  const std::vector<std::size_t> primes{2, 3, 5, 7};

  std::cout << std::left << std::setw(12) << "group" << std::setw(7) << "order" << std::setw(4) << "h"
            << std::setw(4) << "h*" << std::setw(4) << "h~";
  for (auto p : primes) std::cout << "l" << p << "  ";
  std::cout << '\n';
  for (const auto& name : names) {
    const fgh::GroupPtr g = fgh::lab::build_group(name);
    const fgh::HeightReport r = fgh::named_heights(*g, primes);
    std::cout << std::setw(12) << name << std::setw(7) << r.order << std::setw(4) << r.h.to_string()
              << std::setw(4) << r.h_star.to_string() << std::setw(4) << (r.h_tilde ? r.h_tilde->to_string() : "-");
    for (auto p : primes) std::cout << std::setw(4) << r.lambda.at(p);
    std::cout << '\n';
  }
}
