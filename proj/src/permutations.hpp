#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace riordan {

// Permutation of [n] in one-line notation, 1-based values. n = 0 is the empty
// permutation.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);
    static Permutation from_word(std::vector<int> word);
    // Space- or comma-separated integers.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    // Value at 1-based position.
    int at(int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }
    const std::vector<int>& word() const { return word_; }
    std::string str() const;

    bool operator==(const Permutation& other) const = default;
    bool operator<(const Permutation& other) const { return word_ < other.word_; }

private:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
    std::vector<int> word_;
};

// No i < j < k with pi_i > pi_j > pi_k.
bool avoids_321(const Permutation& p);

// Every occurrence of 231 (pi_j > pi_i > pi_k, i < j < k) extends to 3142:
// some i < m < j has pi_m < pi_k.
bool avoids_3bar142(const Permutation& p);

// Positions i with pi_i = i, ascending. Empty iff p is a derangement.
std::vector<int> fixed_points(const Permutation& p);

long long inversion_number(const Permutation& p);

// Canonical reduced decomposition: pairs (h_i, t_i) with h_i >= t_i >= 1 and
// strictly increasing heads, denoting sigma_i = s_{h_i} s_{h_i-1} ... s_{t_i}.
struct CanonicalDecomposition {
    std::vector<std::pair<int, int>> pairs;

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
    // Throws PreconditionError when the type invariants fail.
    void check() const;
    std::string str() const;

    bool operator==(const CanonicalDecomposition& other) const = default;
};

// pi = (1 2 ... n) sigma_1 ... sigma_k, each s_i swapping positions i, i+1
// acting on the right. Requires h_k <= n-1.
Permutation apply_decomposition(int n, const CanonicalDecomposition& d);

// The unique decomposition with apply_decomposition(n, result) == p, found by
// peeling the largest misplaced value.
CanonicalDecomposition extract_decomposition(const Permutation& p);

// t_{i+1} >= t_i + 2 for all consecutive pairs (the avoidance characterization).
bool satisfies_avoidance_condition(const CanonicalDecomposition& d);

// t_1 = 1, h_k = n-1 and h_i + 2 >= t_{i+1} >= t_i + 2 (the derangement
// characterization). The empty decomposition qualifies only for n = 0.
bool satisfies_derangement_condition(int n, const CanonicalDecomposition& d);

// All of S_n(321, 3bar142) (or its derangements) in lexicographic one-line
// order, generated from decompositions satisfying the characterization.
std::vector<Permutation> enumerate_avoiders(int n, bool derangements_only);

// The decompositions driving enumerate_avoiders, in generation order.
std::vector<CanonicalDecomposition> enumerate_avoider_decompositions(int n, bool derangements_only);

}  // namespace riordan
