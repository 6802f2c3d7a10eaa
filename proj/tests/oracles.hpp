// Test-side oracles, kept deliberately independent of the library code: brute
// generate-and-filter enumeration, literal definition transcriptions, and a
// cell-counting area. Only usable at small n.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<int> heights(const std::string& p) {
    std::vector<int> h{0};
    for (char c : p) h.push_back(h.back() + (c == 'U' ? 1 : c == 'D' ? -1 : 0));
    return h;
}

inline bool valid_path(const std::string& p, const std::string& cls) {
    int h = 0;
    for (char c : p) {
        if (cls == "dyck" && c != 'U' && c != 'D') return false;
        if ((cls == "motzkin" || cls == "riordan") && c == 'W') return false;
        if (c == 'H' && h == 0 && (cls == "riordan" || cls == "2mns")) return false;
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
        if (h < 0) return false;
    }
    return h == 0;
}

// Every string over UHWD of length n that satisfies the class, in the library's
// step order U < H < W < D (so the lists are directly comparable).
inline std::vector<std::string> brute_paths(const std::string& cls, int n) {
    std::vector<std::string> out;
    std::string cur(static_cast<std::size_t>(n), 'U');
    const std::string alphabet = "UHWD";
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (valid_path(cur, cls)) out.push_back(cur);
            return;
        }
        for (char c : alphabet) {
            cur[static_cast<std::size_t>(i)] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Area by cells: each column contributes its full squares plus a half for a
// diagonal step.
inline long long area_cells(const std::string& p) {
    auto h = heights(p);
    long long twice = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        twice += 2 * std::min(h[x], h[x + 1]);
        if (h[x] != h[x + 1]) twice += 1;
    }
    return twice / 2;
}

// Literal transcription of the pattern definitions.
inline bool avoids_321(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (w[i] > w[j] && w[j] > w[k]) return false;
    return true;
}

inline bool avoids_3bar142(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!(w[j] > w[i] && w[i] > w[k])) continue;
                bool witness = false;
                for (int m = i + 1; m < j && !witness; ++m)
                    if (w[m] < w[k]) witness = true;
                if (!witness) return false;
            }
    return true;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

// All plane trees with n edges as parenthesis strings (generate every shape,
// no structural shortcuts), for filtering by tree predicates.
inline std::vector<std::string> brute_plane_trees(int n) {
    static std::vector<std::vector<std::string>> memo;
    if (memo.empty()) memo.push_back({"()"});
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        std::vector<std::string> out;
        // First child subtree has k edges, the rest of the root has m-k-1.
        for (int k = 0; k <= m - 1; ++k)
            for (const std::string& first : memo[static_cast<std::size_t>(k)])
                for (const std::string& rest : memo[static_cast<std::size_t>(m - 1 - k)])
                    out.push_back("(" + first + rest.substr(1));
        memo.push_back(std::move(out));
    }
    return memo[static_cast<std::size_t>(n)];
}

inline bool no_outdegree_one(const std::string& paren) {
    // Children of each vertex counted by direct scan.
    std::vector<int> child_count;
    for (char c : paren) {
        if (c == '(') {
            if (!child_count.empty()) ++child_count.back();
            child_count.push_back(0);
        } else {
            if (child_count.back() == 1) return false;
            child_count.pop_back();
        }
    }
    return true;
}

}  // namespace oracle
