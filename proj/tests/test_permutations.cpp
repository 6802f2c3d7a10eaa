#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permutations.hpp"
#include "sequences.hpp"

using namespace riordan;

namespace {

Permutation perm(std::initializer_list<int> word) { return Permutation::from_word(word); }

const std::vector<int> kEq8Word = {4, 1, 2, 3, 9, 5, 13, 6, 7, 8, 10, 14, 11, 17, 12, 15, 16};

CanonicalDecomposition decomp(std::initializer_list<std::pair<int, int>> pairs) {
    CanonicalDecomposition d;
    d.pairs = pairs;
    return d;
}

}  // namespace

TEST_SUITE("permutations") {

TEST_CASE("construction and parsing") {
    CHECK(Permutation::identity(5).str() == "1 2 3 4 5");
    CHECK(Permutation::parse("3 1 5 2 6 4").word() == std::vector<int>{3, 1, 5, 2, 6, 4});
    CHECK(Permutation::parse("3,1,2").word() == std::vector<int>{3, 1, 2});
    CHECK(Permutation::parse("").size() == 0);
    CHECK_THROWS_AS(Permutation::from_word({1, 1, 3}), PreconditionError);
    CHECK_THROWS_AS(Permutation::from_word({0, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation::parse("1 x 2"), ParseError);
}

TEST_CASE("avoids_321") {
    CHECK_FALSE(avoids_321(perm({3, 2, 1})));
    CHECK(avoids_321(perm({3, 1, 5, 2, 6, 4})));
    CHECK(avoids_321(Permutation::identity(5)));
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_permutation(n, [&](const std::vector<int>& w) {
            CHECK(avoids_321(Permutation::from_word(w)) == oracle::avoids_321(w));
        });
}

TEST_CASE("avoids_3bar142") {
    CHECK_FALSE(avoids_3bar142(perm({2, 3, 1})));
    CHECK(avoids_3bar142(perm({3, 1, 4, 2})));
    CHECK(avoids_3bar142(perm({3, 1, 5, 2, 6, 4})));
    for (int n = 0; n <= 7; ++n)
        oracle::for_each_permutation(n, [&](const std::vector<int>& w) {
            CHECK(avoids_3bar142(Permutation::from_word(w)) == oracle::avoids_3bar142(w));
        });
}

TEST_CASE("fixed_points") {
    CHECK(fixed_points(Permutation::identity(3)) == std::vector<int>{1, 2, 3});
    CHECK(fixed_points(perm({3, 1, 5, 2, 6, 4})).empty());
    CHECK(fixed_points(Permutation::from_word(kEq8Word)).empty());
}

TEST_CASE("inversion_number") {
    CHECK(inversion_number(Permutation::identity(8)) == 0);
    CHECK(inversion_number(perm({3, 1, 5, 2, 6, 4})) == 5);
    CHECK(inversion_number(Permutation::from_word(kEq8Word)) == 18);
}

TEST_CASE("apply_decomposition") {
    CHECK(apply_decomposition(6, decomp({{2, 1}, {4, 3}, {5, 5}})).str() == "3 1 5 2 6 4");
    CHECK(apply_decomposition(17, decomp({{3, 1}, {8, 5}, {12, 7}, {13, 12}, {16, 14}})).word() ==
          kEq8Word);
    CHECK(apply_decomposition(5, CanonicalDecomposition{}) == Permutation::identity(5));
    CHECK_THROWS_AS(apply_decomposition(5, decomp({{5, 2}})), PreconditionError);   // h_k > n-1
    CHECK_THROWS_AS(apply_decomposition(6, decomp({{2, 3}})), PreconditionError);   // t > h
    CHECK_THROWS_AS(apply_decomposition(6, decomp({{3, 1}, {3, 3}})), PreconditionError);
}

TEST_CASE("block semantics: value h+1 moves to position t") {
    // Each block removes the value h_i + 1 and reinserts it at position t_i.
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        std::shuffle(word.begin(), word.end(), rng);
        Permutation p = Permutation::from_word(word);
        CanonicalDecomposition d = extract_decomposition(p);
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        for (const auto& [h, t] : d.pairs) {
            int value = h + 1;
            w.erase(std::find(w.begin(), w.end(), value));
            w.insert(w.begin() + (t - 1), value);
        }
        CHECK(w == p.word());
    }
}

TEST_CASE("extract_decomposition") {
    CHECK(extract_decomposition(perm({3, 1, 5, 2, 6, 4})) == decomp({{2, 1}, {4, 3}, {5, 5}}));
    CHECK(extract_decomposition(Permutation::identity(8)).empty());
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_permutation(n, [&](const std::vector<int>& w) {
            Permutation p = Permutation::from_word(w);
            CHECK(apply_decomposition(n, extract_decomposition(p)) == p);
        });
}

TEST_CASE("extraction round trip on random large permutations") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 50);
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        std::shuffle(word.begin(), word.end(), rng);
        Permutation p = Permutation::from_word(word);
        CHECK(apply_decomposition(n, extract_decomposition(p)) == p);
    }
}

TEST_CASE("satisfies_avoidance_condition") {
    CHECK(satisfies_avoidance_condition(decomp({{2, 1}, {4, 3}, {5, 5}})));
    CHECK_FALSE(satisfies_avoidance_condition(decomp({{2, 1}, {3, 2}})));
    CHECK(satisfies_avoidance_condition(CanonicalDecomposition{}));
}

TEST_CASE("satisfies_derangement_condition") {
    CHECK(satisfies_derangement_condition(17, decomp({{3, 1}, {8, 5}, {12, 7}, {13, 12}, {16, 14}})));
    CHECK(satisfies_derangement_condition(6, decomp({{2, 1}, {4, 3}, {5, 5}})));
    CHECK(satisfies_derangement_condition(6, decomp({{2, 1}, {5, 4}})));
    CHECK_FALSE(satisfies_derangement_condition(6, decomp({{2, 1}, {5, 5}})));  // t_2 > h_1 + 2
    CHECK_FALSE(satisfies_derangement_condition(6, decomp({{2, 1}, {4, 4}, {5, 5}})));
    CHECK_FALSE(satisfies_derangement_condition(6, decomp({{2, 2}, {5, 4}})));  // t_1 != 1
    CHECK_FALSE(satisfies_derangement_condition(6, decomp({{2, 1}, {4, 3}})));  // h_k != n-1
    CHECK(satisfies_derangement_condition(0, CanonicalDecomposition{}));
    CHECK_FALSE(satisfies_derangement_condition(1, CanonicalDecomposition{}));
}

TEST_CASE("characterizations against brute force") {
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_permutation(n, [&](const std::vector<int>& w) {
            Permutation p = Permutation::from_word(w);
            CanonicalDecomposition d = extract_decomposition(p);
            bool avoids = oracle::avoids_321(w) && oracle::avoids_3bar142(w);
            CHECK(satisfies_avoidance_condition(d) == avoids);
            CHECK(satisfies_derangement_condition(n, d) ==
                  (avoids && fixed_points(p).empty()));
        });
}

TEST_CASE("enumerate_avoiders") {
    auto strs = [](const std::vector<Permutation>& ps) {
        std::vector<std::string> out;
        for (const auto& p : ps) out.push_back(p.str());
        return out;
    };
    CHECK(strs(enumerate_avoiders(3, false)) ==
          std::vector<std::string>{"1 2 3", "1 3 2", "2 1 3", "3 1 2"});
    CHECK(enumerate_avoiders(4, true).size() == 3);
    CHECK(enumerate_avoiders(1, true).empty());
    CHECK(enumerate_avoiders(0, true).size() == 1);
    for (int n = 0; n <= 8; ++n) {
        CHECK(Count(static_cast<long>(enumerate_avoiders(n, false).size())) == motzkin(n));
        CHECK(Count(static_cast<long>(enumerate_avoiders(n, true).size())) ==
              riordan_recurrence(n));
    }
    for (int n = 0; n <= 6; ++n) {
        std::vector<Permutation> filtered, filtered_der;
        oracle::for_each_permutation(n, [&](const std::vector<int>& w) {
            if (oracle::avoids_321(w) && oracle::avoids_3bar142(w)) {
                filtered.push_back(Permutation::from_word(w));
                if (fixed_points(filtered.back()).empty()) filtered_der.push_back(filtered.back());
            }
        });
        CHECK(enumerate_avoiders(n, false) == filtered);
        CHECK(enumerate_avoiders(n, true) == filtered_der);
    }
}

TEST_CASE("generated decompositions give reduced words") {
    for (int n = 0; n <= 8; ++n)
        for (const CanonicalDecomposition& d : enumerate_avoider_decompositions(n, false)) {
            long long length = 0;
            for (const auto& [h, t] : d.pairs) length += h - t + 1;
            CHECK(inversion_number(apply_decomposition(n, d)) == length);
        }
}

}  // TEST_SUITE
