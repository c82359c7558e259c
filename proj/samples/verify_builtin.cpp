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

// Verifies the built-in alternating 6-cycle certificate and prints the class
// coefficients next to the kernel of the flag matrix.

#include <iostream>

#include "flagcert/certificate.hpp"

int main() {
  const auto cert = flagcert::builtin_c6a_certificate();
  const auto report = flagcert::verify_certificate(cert);
  for (const auto& check : report.checks) {
    std::cout << check.name << ": " << flagcert::status_name(check.status) << "\n";
  }
  for (flagcert::ClassIndex l = 1; l <= report.coefficients.size(); ++l) {
    std::cout << "J" << l << " " << report.coefficients[l] << "\n";
  }
  for (const auto& v : report.families.front().psd.kernel_basis) {
    for (const auto& x : v) std::cout << x << " ";
    std::cout << "\n";
  }
  return report.passed() ? 0 : 1;
}
