#include "sequences.hpp"

#include <mutex>
#include <vector>

namespace riordan {

namespace {

void check_index(int n, const char* who) {
    require(n >= 0, std::string(who) + ": index must be nonnegative");
}

}  // namespace

Count riordan_closed(int n) {
    check_index(n, "riordan_closed");
    if (n == 0) return 1;
    Count sum = 0;
    for (int k = 1; k <= n - 1; ++k)
        sum += binomial(n + 1, k) * binomial(n - k - 1, k - 1);
    return exact_div(sum, n + 1, "riordan_closed: sum not divisible by n+1");
}

Count riordan_recurrence(int n) {
    check_index(n, "riordan_recurrence");
    static std::vector<Count> memo{1, 0};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        Count num = Count(m - 1) * (2 * memo[m - 1] + 3 * memo[m - 2]);
        memo.push_back(exact_div(num, m + 1, "riordan_recurrence: (n+1) does not divide (n-1)(2r_{n-1}+3r_{n-2})"));
    }
    return memo[n];
}

Count catalan(int n) {
    check_index(n, "catalan");
    return exact_div(binomial(2L * n, n), n + 1, "catalan: C(2n,n) not divisible by n+1");
}

Count catalan_from_riordan(int n) {
    check_index(n, "catalan_from_riordan");
    Count sum = 0;
    for (int k = 0; k <= n; ++k)
        sum += binomial(n, k) * riordan_recurrence(k);
    return sum;
}

Count riordan_from_catalan(int n) {
    check_index(n, "riordan_from_catalan");
    Count sum = 0;  // signed intermediates are fine, the result must not be
    for (int k = 0; k <= n; ++k) {
        Count term = binomial(n, k) * catalan(k);
        if ((n - k) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    internal_check(sum >= 0, "riordan_from_catalan: alternating sum is negative");
    return sum;
}

Count motzkin(int n) {
    check_index(n, "motzkin");
    static std::vector<Count> memo{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        Count v = memo[m - 1];
        for (int k = 0; k <= m - 2; ++k)
            v += memo[k] * memo[m - 2 - k];
        memo.push_back(v);
    }
    return memo[n];
}

Count labelled_forest_count(int n, int k) {
    require(n >= 1, "labelled_forest_count: n must be positive");
    require(k >= 1, "labelled_forest_count: k must be positive");
    return binomial(n + 1, k) * binomial(n - k - 1, k - 1) * factorial(static_cast<unsigned long>(n));
}

Count bush_count_by_internal(int n, int k) {
    check_index(n, "bush_count_by_internal");
    require(k >= 0, "bush_count_by_internal: k must be nonnegative");
    if (n == 0) return k == 0 ? 1 : 0;
    Count num = binomial(n + 1, k) * binomial(n - k - 1, k - 1);
    return exact_div(num, n + 1, "bush_count_by_internal: product not divisible by n+1");
}

}  // namespace riordan
