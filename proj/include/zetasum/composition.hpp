#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace zetasum {

// Finite sequence of positive integers indexing a multiple zeta value or a
// multiple harmonic number. The empty sequence is the empty index, whose
// nested sum is 1 by convention.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p);
    explicit Composition(std::vector<int> p);

    int depth() const { return static_cast<int>(parts.size()); }
    int weight() const;
    bool empty() const { return parts.empty(); }
    // Nonempty with first part >= 2, so the associated series converges.
    bool admissible() const { return !parts.empty() && parts.front() >= 2; }

    auto operator<=>(const Composition&) const = default;
};

// {1}_m
Composition ones(int m);
// (head, {1}_m)
Composition hook_index(int head, int m);
Composition concat(const Composition& a, const Composition& b);

// Text format: comma-separated parts with repetition blocks, e.g. "6,1,1"
// and "4,{1}_5". The printer collapses runs of length >= 3 into a block;
// the parser accepts both spellings, so parse(format(s)) == s always and
// format(parse(t)) == t on canonical text. The empty index prints as "".
std::string format_composition(const Composition& s);
Composition parse_composition(const std::string& text);

} // namespace zetasum
