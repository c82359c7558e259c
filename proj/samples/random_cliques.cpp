// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Alternating 6-cycle density of a few random colourings of K_n, against the
// 1/64 bound.
//
//   sample_random_cliques [n] [seed]

#include <cstdlib>
#include <iostream>

#include "flagcert/oracle.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 40;
  const flagcert::Seed seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  if (n < 6) {
    std::cerr << "n must be at least 6\n";
    return 2;
  }
  for (std::uint64_t t = 0; t < 5; ++t) {
    const auto g = flagcert::random_clique_coloring(n, flagcert::derive_seed(seed, t));
    const auto t_inj = flagcert::t_inj_six_cycle(flagcert::kAlternatingSixCycle, g);
    std::cout << "trial " << t << ": " << t_inj.to_double() << (t_inj <= flagcert::Rational(1, 64) ? "" : "  above")
              << "\n";
  }
  return 0;
}
