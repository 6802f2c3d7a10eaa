#include "permutations.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace riordan {

Permutation Permutation::identity(int n) {
    require(n >= 0, "Permutation::identity: n must be nonnegative");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_word(std::vector<int> word) {
    int n = static_cast<int>(word.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw PreconditionError("Permutation: word is not a bijection on [n]");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
    std::string buf(text);
    for (char& c : buf)
        if (c == ',') c = ' ';
    std::istringstream in(buf);
    std::vector<int> word;
    long v;
    while (in >> v) {
        if (v < 1 || v > std::numeric_limits<int>::max())
            throw ParseError("permutation parse: value out of range", word.size());
        word.push_back(static_cast<int>(v));
    }
    if (!in.eof()) throw ParseError("permutation parse: not an integer", word.size());
    return from_word(std::move(word));
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(word_[i]);
    }
    return out;
}

bool avoids_321(const Permutation& p) {
    int n = p.size();
    const std::vector<int>& w = p.word();
    std::vector<int> suffix_min(static_cast<std::size_t>(n) + 1, std::numeric_limits<int>::max());
    for (int i = n - 1; i >= 0; --i)
        suffix_min[i] = std::min(suffix_min[i + 1], w[static_cast<std::size_t>(i)]);
    int prefix_max = 0;
    for (int j = 0; j < n; ++j) {
        if (prefix_max > w[static_cast<std::size_t>(j)] && suffix_min[j + 1] < w[static_cast<std::size_t>(j)])
            return false;
        prefix_max = std::max(prefix_max, w[static_cast<std::size_t>(j)]);
    }
    return true;
}

bool avoids_3bar142(const Permutation& p) {
    // For a 231 occurrence at (i, j, k) the witness m exists iff
    // min(w over (i,j)) < w_k, so with between = that minimum, (i, j) is bad
    // exactly when some later value is <= min(between, w_i - 1).
    int n = p.size();
    const std::vector<int>& w = p.word();
    std::vector<int> suffix_min(static_cast<std::size_t>(n) + 1, std::numeric_limits<int>::max());
    for (int i = n - 1; i >= 0; --i)
        suffix_min[i] = std::min(suffix_min[i + 1], w[static_cast<std::size_t>(i)]);
    for (int j = 1; j < n; ++j) {
        int between = std::numeric_limits<int>::max();
        for (int i = j - 1; i >= 0; --i) {
            if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)]) {
                int bound = std::min(between, w[static_cast<std::size_t>(i)] - 1);
                if (suffix_min[j + 1] <= bound) return false;
            }
            between = std::min(between, w[static_cast<std::size_t>(i)]);
        }
    }
    return true;
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) == i) out.push_back(i);
    return out;
}

long long inversion_number(const Permutation& p) {
    long long inv = 0;
    int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.at(i) > p.at(j)) ++inv;
    return inv;
}

void CanonicalDecomposition::check() const {
    int prev_head = 0;
    for (const auto& [h, t] : pairs) {
        if (t < 1 || h < t)
            throw PreconditionError("decomposition: needs h_i >= t_i >= 1");
        if (h <= prev_head)
            throw PreconditionError("decomposition: heads must strictly increase");
        prev_head = h;
    }
}

std::string CanonicalDecomposition::str() const {
    std::string out;
    for (const auto& [h, t] : pairs) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(h) + "," + std::to_string(t) + ")";
    }
    return out;
}

Permutation apply_decomposition(int n, const CanonicalDecomposition& d) {
    require(n >= 0, "apply_decomposition: n must be nonnegative");
    d.check();
    if (!d.empty())
        require(d.pairs.back().first <= n - 1, "apply_decomposition: h_k must be at most n-1");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (const auto& [h, t] : d.pairs)
        for (int s = h; s >= t; --s) std::swap(w[static_cast<std::size_t>(s - 1)], w[static_cast<std::size_t>(s)]);
    return Permutation::from_word(std::move(w));
}

CanonicalDecomposition extract_decomposition(const Permutation& p) {
    std::vector<int> w = p.word();
    int n = p.size();
    std::vector<std::pair<int, int>> rev;
    for (int v = n; v >= 1; --v) {
        auto it = std::find(w.begin(), w.end(), v);
        int pos = static_cast<int>(it - w.begin()) + 1;
        if (pos == v) continue;
        internal_check(pos < v, "extract_decomposition: larger values must already be in place");
        rev.emplace_back(v - 1, pos);
        w.erase(it);
        w.insert(w.begin() + (v - 1), v);
    }
    CanonicalDecomposition d;
    d.pairs.assign(rev.rbegin(), rev.rend());
    d.check();
    return d;
}

bool satisfies_avoidance_condition(const CanonicalDecomposition& d) {
    for (std::size_t i = 0; i + 1 < d.pairs.size(); ++i)
        if (d.pairs[i + 1].second < d.pairs[i].second + 2) return false;
    return true;
}

bool satisfies_derangement_condition(int n, const CanonicalDecomposition& d) {
    if (d.empty()) return n == 0;
    if (d.pairs.front().second != 1) return false;
    if (d.pairs.back().first != n - 1) return false;
    for (std::size_t i = 0; i + 1 < d.pairs.size(); ++i) {
        int t_next = d.pairs[i + 1].second;
        if (t_next < d.pairs[i].second + 2) return false;
        if (t_next > d.pairs[i].first + 2) return false;
    }
    return true;
}

namespace {

void gen_decompositions(int n, bool derangements_only, CanonicalDecomposition& cur,
                        std::vector<CanonicalDecomposition>& out) {
    bool first = cur.empty();
    int last_h = first ? 0 : cur.pairs.back().first;
    int last_t = first ? 0 : cur.pairs.back().second;
    if (!derangements_only || (!first && last_h == n - 1) || (first && n == 0))
        out.push_back(cur);
    for (int h = last_h + 1; h <= n - 1; ++h) {
        int t_lo = first ? 1 : last_t + 2;
        int t_hi = h;
        if (derangements_only) {
            if (first)
                t_hi = 1;  // t_1 = 1
            else
                t_hi = std::min(t_hi, last_h + 2);
        }
        for (int t = t_lo; t <= t_hi; ++t) {
            cur.pairs.emplace_back(h, t);
            gen_decompositions(n, derangements_only, cur, out);
            cur.pairs.pop_back();
        }
    }
}

}  // namespace

std::vector<CanonicalDecomposition> enumerate_avoider_decompositions(int n, bool derangements_only) {
    require(n >= 0, "enumerate_avoiders: n must be nonnegative");
    std::vector<CanonicalDecomposition> out;
    CanonicalDecomposition cur;
    gen_decompositions(n, derangements_only, cur, out);
    return out;
}

std::vector<Permutation> enumerate_avoiders(int n, bool derangements_only) {
    std::vector<Permutation> out;
    for (const CanonicalDecomposition& d : enumerate_avoider_decompositions(n, derangements_only))
        out.push_back(apply_decomposition(n, d));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace riordan
