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

#include <algorithm>
#include <vector>

#include "y00/cipher.hpp"

namespace y00 {

namespace {

struct TableRow {
    unsigned degree;
    std::vector<unsigned> primary;
    std::vector<unsigned> secondary;
};

// Primitive polynomials over GF(2), lowest weight first. Each entry was
// checked for order 2^n - 1 against the full factorization of 2^n - 1.
const std::vector<TableRow> &table() {
    static const std::vector<TableRow> rows = {
        {4, {4, 1, 0}, {4, 3, 0}},
        {5, {5, 2, 0}, {5, 3, 0}},
        {6, {6, 1, 0}, {6, 5, 0}},
        {7, {7, 1, 0}, {7, 3, 0}},
        {8, {8, 7, 6, 1, 0}, {8, 7, 5, 3, 0}},
        {9, {9, 4, 0}, {9, 5, 0}},
        {10, {10, 3, 0}, {10, 7, 0}},
        {11, {11, 2, 0}, {11, 9, 0}},
        {12, {12, 11, 10, 4, 0}, {12, 11, 10, 2, 0}},
        {13, {13, 12, 11, 8, 0}, {13, 12, 11, 2, 0}},
        {14, {14, 13, 12, 2, 0}, {14, 13, 11, 9, 0}},
        {15, {15, 1, 0}, {15, 4, 0}},
        {16, {16, 15, 13, 4, 0}, {16, 15, 12, 10, 0}},
        {17, {17, 3, 0}, {17, 5, 0}},
        {18, {18, 7, 0}, {18, 11, 0}},
        {19, {19, 18, 17, 14, 0}, {19, 18, 17, 13, 0}},
        {20, {20, 3, 0}, {20, 17, 0}},
        {21, {21, 2, 0}, {21, 19, 0}},
        {22, {22, 1, 0}, {22, 21, 0}},
        {23, {23, 5, 0}, {23, 9, 0}},
        {24, {24, 23, 22, 17, 0}, {24, 23, 22, 7, 0}},
        {25, {25, 3, 0}, {25, 7, 0}},
        {26, {26, 25, 24, 20, 0}, {26, 25, 24, 8, 0}},
        {27, {27, 26, 25, 22, 0}, {27, 26, 25, 17, 0}},
        {28, {28, 3, 0}, {28, 9, 0}},
        {29, {29, 2, 0}, {29, 27, 0}},
        {30, {30, 29, 28, 7, 0}, {30, 29, 26, 24, 0}},
        {31, {31, 3, 0}, {31, 6, 0}},
        {32, {32, 31, 30, 10, 0}, {32, 31, 29, 1, 0}},
        {33, {33, 13, 0}, {33, 20, 0}},
        {34, {34, 33, 32, 7, 0}, {34, 33, 32, 4, 0}},
        {35, {35, 2, 0}, {35, 33, 0}},
        {36, {36, 11, 0}, {36, 25, 0}},
        {37, {37, 36, 35, 28, 0}, {37, 36, 35, 19, 0}},
        {38, {38, 37, 35, 25, 0}, {38, 37, 35, 16, 0}},
        {39, {39, 4, 0}, {39, 8, 0}},
        {40, {40, 39, 38, 5, 0}, {40, 39, 37, 31, 0}},
        {41, {41, 3, 0}, {41, 20, 0}},
        {42, {42, 41, 40, 13, 0}, {42, 41, 40, 5, 0}},
        {43, {43, 42, 41, 31, 0}, {43, 42, 41, 17, 0}},
        {44, {44, 43, 41, 6, 0}, {44, 43, 40, 27, 0}},
        {45, {45, 44, 42, 41, 0}, {45, 44, 42, 23, 0}},
        {46, {46, 45, 43, 37, 0}, {46, 45, 43, 29, 0}},
        {47, {47, 5, 0}, {47, 14, 0}},
        {48, {48, 47, 45, 20, 0}, {48, 47, 45, 9, 0}},
        {49, {49, 9, 0}, {49, 12, 0}},
        {50, {50, 49, 48, 34, 0}, {50, 49, 48, 8, 0}},
        {51, {51, 50, 49, 23, 0}, {51, 50, 49, 7, 0}},
        {52, {52, 3, 0}, {52, 19, 0}},
        {53, {53, 52, 51, 47, 0}, {53, 52, 51, 41, 0}},
        {54, {54, 53, 52, 37, 0}, {54, 53, 51, 5, 0}},
        {55, {55, 24, 0}, {55, 31, 0}},
        {56, {56, 55, 54, 14, 0}, {56, 55, 53, 30, 0}},
        {57, {57, 7, 0}, {57, 22, 0}},
        {58, {58, 19, 0}, {58, 39, 0}},
        {59, {59, 58, 57, 35, 0}, {59, 58, 57, 25, 0}},
        {60, {60, 1, 0}, {60, 11, 0}},
        {61, {61, 60, 59, 56, 0}, {61, 60, 59, 32, 0}},
        {62, {62, 61, 59, 34, 0}, {62, 61, 59, 1, 0}},
        {63, {63, 1, 0}, {63, 5, 0}},
        {64, {64, 63, 62, 53, 0}, {64, 63, 61, 60, 0}},
        {96, {96, 95, 94, 77, 0}, {96, 95, 94, 53, 0}},
        {100, {100, 37, 0}, {100, 63, 0}},
        {127, {127, 1, 0}, {127, 7, 0}},
        {128, {128, 127, 126, 121, 0}, {128, 127, 125, 24, 0}},
    };
    return rows;
}

} // namespace

std::optional<TapPolynomial> maximal_taps(unsigned degree, unsigned variant) {
    if (variant > 1) return std::nullopt;
    const auto &rows = table();
    const auto it = std::find_if(rows.begin(), rows.end(), [degree](const TableRow &r) { return r.degree == degree; });
    if (it == rows.end()) return std::nullopt;
    return TapPolynomial(variant == 0 ? it->primary : it->secondary);
}

} // namespace y00
