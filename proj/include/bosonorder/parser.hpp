#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bosonorder/rational.hpp"
#include "bosonorder/weyl.hpp"

namespace bosonorder {

// Grammar:
//   expr     := term (("+"|"-") term)*
//   term     := [rational] factor+
//   factor   := base ["^" uint]
//   base     := "a" | "ad" | "(" expr ")"
//   rational := int ["/" uint]
// Juxtaposition is operator product in written order. "a†" is accepted
// as an alias for "ad".

struct ExprNode;

/// A generator or a parenthesized subexpression, raised to a power. Exactly
/// one of `generator` / `sub` is populated; `sub` holds at most one node (a
/// vector only because it permits the recursive incomplete type).
struct Factor {
    std::optional<Generator> generator;
    std::vector<ExprNode> sub;
    unsigned exponent = 1;

    bool is_generator() const { return generator.has_value(); }
};

/// coefficient * factor factor ... (product in written order).
struct ExprTerm {
    Rat coefficient = 1;
    std::vector<Factor> factors;
};

/// Sum of terms.
struct ExprNode {
    std::vector<ExprTerm> terms;
};

bool operator==(const ExprNode& a, const ExprNode& b);
bool operator==(const Factor& a, const Factor& b);
bool operator==(const ExprTerm& a, const ExprTerm& b);

/// Parses expression text. Throws SyntaxError with the byte offset and the
/// expected-token description on malformed input.
ExprNode parse_expression(std::string_view input);

/// Canonical rendering; parse(print(ast)) == ast.
std::string to_string(const ExprNode& ast);

/// Normal orders the expression in the Weyl algebra (sums and products of
/// already-ordered subresults). Total for every well-formed AST.
NormalForm to_normal_form(const ExprNode& ast);

/// Flattens into weighted words (distributing sums and expanding powers),
/// the brute-force route to the same normal form. max_words caps the
/// expansion size; exceeding it throws OutOfRangeError.
std::vector<std::pair<Rat, Word>> expand_words(const ExprNode& ast,
                                               std::size_t max_words = 1000000);

}  // namespace bosonorder
