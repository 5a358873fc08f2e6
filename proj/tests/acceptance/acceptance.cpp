// Copyright 2026 The y00sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs every acceptance criterion once and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "y00tools/claims.hpp"

int main(int argc, char **argv) {
    y00::claims::ClaimOptions options;
    if (argc > 1) options.threads = static_cast<unsigned>(std::stoul(argv[1]));
    int passed = 0;
    const auto results = y00::claims::run_claims(options, [&](const y00::claims::ClaimResult &r) {
        std::cout << y00::claims::format_line(r) << '\n';
        for (const auto &note : r.notes) std::cout << "    note: " << note << '\n';
        std::cout.flush();
        passed += r.pass ? 1 : 0;
    });
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size()) ? EXIT_SUCCESS : EXIT_FAILURE;
}
