#pragma once

#include "count.hpp"

namespace riordan {

/// n-th Riordan number by the closed summation formula
/// r_n = (1/(n+1)) * sum_{k=1}^{n-1} C(n+1,k) C(n-k-1,k-1), with r_0 = 1.
Count riordan_closed(int n);

/// n-th Riordan number by the three-term recurrence
/// (n+1) r_n = (n-1)(2 r_{n-1} + 3 r_{n-2}), r_0 = 1, r_1 = 0.
/// The division by n+1 is checked exact. Memoized; safe under concurrent callers.
Count riordan_recurrence(int n);

/// n-th Catalan number C(2n,n)/(n+1).
Count catalan(int n);

/// c_n recovered from Riordan numbers: sum_k C(n,k) r_k.
Count catalan_from_riordan(int n);

/// r_n recovered from Catalan numbers by the alternating sum
/// sum_k (-1)^(n-k) C(n,k) c_k; the result is checked nonnegative.
Count riordan_from_catalan(int n);

/// n-th Motzkin number (convolution recurrence). Memoized.
Count motzkin(int n);

/// |F_{n,k}| = C(n+1,k) C(n-k-1,k-1) n!, the number of labelled outdegree-one-free
/// plane forests counted by roots; requires n >= 1, k >= 1.
Count labelled_forest_count(int n, int k);

/// Number of short bushes with n edges and k internal vertices:
/// C(n+1,k) C(n-k-1,k-1) / (n+1), division checked exact. (n,k) = (0,0) gives 1,
/// the lone-vertex bush, which the formula's empty-binomial convention misses.
Count bush_count_by_internal(int n, int k);

}  // namespace riordan
