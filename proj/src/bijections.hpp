#pragma once

#include <utility>
#include <vector>

#include "paths.hpp"
#include "permutations.hpp"

namespace riordan {

// Pairwise coding of a Dyck path of length 2n into a 2-Motzkin path of length
// n: UU -> up, UD -> wavy, DU -> straight level, DD -> down. The image never
// has a straight level step on the axis.
LatticePath dyck_pair_encode(const LatticePath& dyck);

// Inverse of dyck_pair_encode; input must avoid straight level steps on the axis.
LatticePath dyck_pair_decode(const LatticePath& two_motzkin);

// Drop every wavy step, returning the Riordan path that remains together with
// the 0-based positions the wavy steps occupied in the input.
std::pair<LatticePath, std::vector<int>> remove_wavy(const LatticePath& two_motzkin);

// Put wavy steps back at the given final positions; inverse of remove_wavy.
LatticePath insert_wavy(const LatticePath& riordan, const std::vector<int>& positions);

// Strip decomposition of a Motzkin path: repeatedly take the last up step
// A->B and last down step E->F, record h = cell label of E->F and t = cell
// label of the step starting at B, then lower the strip between B and E by
// one. Pairs are returned with strictly increasing heads and satisfy the
// avoidance condition.
CanonicalDecomposition strip_decompose(const LatticePath& motzkin);

// The bijection from Motzkin paths of length n onto S_n(321, 3bar142):
// apply_decomposition(n, strip_decompose(path)).
Permutation phi(const LatticePath& motzkin);

// One inverse strip step: the first point B' after the last up step with
// coordinate sum x + y = tail gets its incoming level step turned into an up
// step, the level step at x = head becomes the matching down step, and the
// sub-path between is raised one unit.
LatticePath strip_insert(const LatticePath& motzkin, int head, int tail);

// Inverse of phi, built by strip_insert over the extracted decomposition.
// Requires the permutation to avoid (321, 3bar142).
LatticePath phi_inverse(const Permutation& p);

}  // namespace riordan
