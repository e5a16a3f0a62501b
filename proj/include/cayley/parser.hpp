#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/derived.hpp"

namespace cayley {

// Syntax or semantic error in a bundle expression, with the 0-based
// character offset at which it was detected.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar (whitespace-insensitive, products written with explicit spacing
// or parentheses since "U*" is a single token):
//   expr    := term { "+" term }
//   term    := factor { "*" factor }
//   factor  := atom [ "(" int ")" ] [ "[" int "]" ]
//   atom    := "O" | "U" | "U*" | "Q" | "Uperp"
//            | "S{" int { "," int } "}" base | "W" int base | "Sym" int base
//            | "R" | "E10" | "E16" | "K" | "(" expr ")"
//   base    := "U" | "U*" | "Q" | "Uperp"   (optionally parenthesized)
// "(t)" is the Pluecker twist; "[m]" is the homological shift, accepted only
// when allow_shift is true. Schur weights must be non-increasing after
// zero-padding to the rank of the base. Products are only defined between
// plain (single-degree, unshifted) bundle sums.
FormalComplex parse_expression(const std::string& text, bool allow_shift = true);

// Canonical printers; parse_expression(print_complex(x)) == x for every
// nonzero complex, with twists absorbed into the Schur weights.
std::string print_bundle(const SchurBundle& s);
std::string print_complex(const FormalComplex& x);

// Collection file: one expression per line, lines consisting of "---"
// (optionally followed by a label) separate Lefschetz blocks, "#" starts a
// comment line.
struct CollectionSpec {
    std::vector<FormalComplex> objects;
    std::vector<std::string> names;  // the source expressions, trimmed
    std::vector<int> theta;          // block sizes; empty when no separators
};
CollectionSpec parse_collection_text(const std::string& content);

}  // namespace cayley
