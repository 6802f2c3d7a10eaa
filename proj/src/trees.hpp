#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paths.hpp"

namespace riordan {

// Rooted plane tree. Canonical form is the preorder balanced-parenthesis
// string: a node is "(" + children + ")", so the lone vertex is "()".
struct PlaneTree {
    std::vector<PlaneTree> children;

    static PlaneTree parse(std::string_view paren);
    std::string str() const;

    int edge_count() const;
    int internal_vertex_count() const;

    // No vertex of outdegree one.
    bool is_short_bush() const;

    bool operator==(const PlaneTree& other) const = default;
};

// All short bushes with n edges as canonical serializations, sorted
// lexicographically (smaller-first). n = 1 yields the empty set.
std::vector<std::string> enumerate_short_bushes(int n);

// Preorder edge coding: at each internal vertex the leftmost child edge emits
// an up step, the rightmost a down step, middle edges emit level steps. The
// image of a short bush with n edges is a Riordan path of length n.
LatticePath bush_to_riordan(const PlaneTree& bush);

// Inverse of the coding; total on valid Riordan paths.
PlaneTree riordan_to_bush(const LatticePath& path);

}  // namespace riordan
