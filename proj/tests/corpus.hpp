#pragma once

#include <random>
#include <string>
#include <vector>

// Deterministic corpus of well-formed operator expressions, used by the
// round-trip, determinism and exactness tests.
inline std::vector<std::string> expression_corpus(std::size_t count) {
    std::mt19937 rng(1905);
    std::uniform_int_distribution<int> small(1, 9);
    std::uniform_int_distribution<int> pick(0, 99);

    auto gen_factor = [&](auto&& self, int depth) -> std::string {
        const int roll = pick(rng);
        std::string base;
        bool paren = false;
        if (depth > 0 && roll < 25) {
            paren = true;
            std::string inner = self(self, depth - 1);
            const int extra = pick(rng) % 3;
            for (int i = 0; i < extra; ++i) {
                inner += (pick(rng) % 2 ? " + " : " - ") + self(self, depth - 1);
            }
            base = "(" + inner + ")";
        } else if (roll < 60) {
            base = "ad";
        } else {
            base = "a";
        }
        // Powers stay small on parenthesized bases so word expansion stays
        // within the default cap.
        if (pick(rng) < 40) {
            base += "^" + std::to_string(1 + pick(rng) % (paren ? 2 : 4));
        }
        return base;
    };

    auto gen_term = [&](int depth) {
        std::string term;
        if (pick(rng) < 45) {
            term = std::to_string(small(rng));
            if (pick(rng) < 30) term += "/" + std::to_string(small(rng));
            term += " ";
        }
        const int factors = 1 + pick(rng) % 3;
        for (int i = 0; i < factors; ++i) {
            if (i > 0) term += " ";
            term += gen_factor(gen_factor, depth);
        }
        return term;
    };

    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string expr;
        if (pick(rng) < 20) expr = "-";
        expr += gen_term(1);
        const int terms = pick(rng) % 3;
        for (int t = 0; t < terms; ++t) {
            expr += (pick(rng) % 2 ? " + " : " - ") + gen_term(2);
        }
        out.push_back(std::move(expr));
    }
    return out;
}
