// Copyright 2026 The gaglrc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Builds the [9,5,3] locality-2 code over GF(3), encodes a message, erases a
// symbol and repairs it from its block.

#include <iostream>

#include "gaglrc/lrc.hpp"

int main() {
    using namespace gaglrc;
    const Field f = Field::create(3, 1);
    const std::vector<Place> places = {
        Place::finite(parse_polynomial(f, "2,2,1")),
        Place::finite(parse_polynomial(f, "1,0,1")),
        Place::finite(parse_polynomial(f, "2,1,1")),
    };
    GagLrcCode code = build_gag_lrc(f, places, 4, rs_code(f, 3, 2));
    std::cout << emit_stage(code, Stage::Generator);

    const std::vector<Symbol> msg = {1, 2, 0, 1, 1};
    std::vector<Symbol> word = code.base().encode(msg);
    std::cout << "codeword:";
    for (Symbol s : word) std::cout << ' ' << f.render(s);
    std::cout << '\n';

    const Symbol lost = word[4];
    word[4] = 0;
    const RepairResult rr = repair_symbol(code, word, 4);
    std::cout << "repaired position 5: " << f.render(rr.symbol) << " (was " << f.render(lost) << ") from";
    for (auto p : rr.recovery_set) std::cout << ' ' << p + 1;
    std::cout << '\n';

    std::cout << "d = " << min_distance_exhaustive(code.base()) << '\n';
    return rr.symbol == lost ? 0 : 1;
}
