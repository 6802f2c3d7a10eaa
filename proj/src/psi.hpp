#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paths.hpp"

namespace riordan {

// Element of the domain of the recurrence bijection for parameter n:
// three unlabelled copies of the Riordan paths of length n-2, Riordan paths
// of length n-2 with one step labelled a, b or c, and Riordan paths of length
// n-1 with one step labelled 1 or 2.
struct PsiDomainElement {
    enum class Kind { Copy, Abc, Num };

    Kind kind = Kind::Copy;
    LatticePath path;
    int copy = 0;     // 1..3 for Kind::Copy
    int index = -1;   // labelled step for Abc / Num
    char label = 0;   // 'a','b','c' or '1','2'

    static PsiDomainElement unlabelled_copy(int copy, LatticePath path);
    static PsiDomainElement abc(char label, int index, LatticePath path);
    static PsiDomainElement num(char label, int index, LatticePath path);

    // Validates shape against the parameter n (path lengths, ranges).
    void check(int n) const;

    // Compact text form: "copy2:UD" or the step string with the label letter
    // after the labelled step, e.g. "UaD", "UH1D".
    std::string str() const;
    static PsiDomainElement parse(std::string_view text);

    bool operator==(const PsiDomainElement& other) const = default;
};

// Riordan path of length n with at most one step starred.
struct StarredPath {
    LatticePath path;
    std::optional<int> star;

    void check(int n) const;

    // Step string with '*' after the starred step, e.g. "U*UDD".
    std::string str() const;
    static StarredPath parse(std::string_view text);

    bool operator==(const StarredPath& other) const = default;
    bool operator<(const StarredPath& other) const;
};

// The recurrence bijection: domain of parameter n (see PsiDomainElement) onto
// the Riordan paths of length n with at most one starred step. Defined for
// n >= 2.
StarredPath psi(const PsiDomainElement& element, int n);

// Inverse of psi; total on valid starred paths of length n.
PsiDomainElement psi_inverse(const StarredPath& starred, int n);

// The full domain / codomain for parameter n, in a fixed deterministic order.
std::vector<PsiDomainElement> psi_domain(int n);
std::vector<StarredPath> psi_codomain(int n);

}  // namespace riordan
