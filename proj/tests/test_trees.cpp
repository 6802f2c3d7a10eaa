#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "sequences.hpp"
#include "trees.hpp"

using namespace riordan;

TEST_SUITE("trees") {

TEST_CASE("parse and serialize") {
    CHECK(PlaneTree::parse("()").str() == "()");
    CHECK(PlaneTree::parse("(()())").str() == "(()())");
    CHECK(PlaneTree::parse("(()())").children.size() == 2);
    CHECK_THROWS_AS(PlaneTree::parse("(()"), ParseError);
    CHECK_THROWS_AS(PlaneTree::parse("()()"), ParseError);
    CHECK_THROWS_AS(PlaneTree::parse(""), ParseError);
}

TEST_CASE("enumerate_short_bushes basics") {
    CHECK(enumerate_short_bushes(0) == std::vector<std::string>{"()"});
    CHECK(enumerate_short_bushes(1).empty());
    CHECK(enumerate_short_bushes(4).size() == 3);
    CHECK(enumerate_short_bushes(2) == std::vector<std::string>{"(()())"});
}

TEST_CASE("enumeration agrees with the generate-and-filter oracle") {
    for (int n = 0; n <= 9; ++n) {
        std::vector<std::string> brute;
        for (const std::string& t : oracle::brute_plane_trees(n))
            if (oracle::no_outdegree_one(t)) brute.push_back(t);
        std::sort(brute.begin(), brute.end());
        CHECK(enumerate_short_bushes(n) == brute);
        CHECK(Count(static_cast<long>(brute.size())) == riordan_recurrence(n));
    }
}

TEST_CASE("bush_to_riordan examples") {
    CHECK(bush_to_riordan(PlaneTree::parse("(()())")).str() == "UD");
    CHECK(bush_to_riordan(PlaneTree::parse("(()()())")).str() == "UHD");
    CHECK(bush_to_riordan(PlaneTree::parse("()")).str() == "");
    CHECK_THROWS_AS(bush_to_riordan(PlaneTree::parse("(())")), PreconditionError);
    CHECK_THROWS_AS(bush_to_riordan(PlaneTree::parse("((())())")), PreconditionError);
}

TEST_CASE("riordan_to_bush examples") {
    CHECK(riordan_to_bush(LatticePath::parse("UD")).str() == "(()())");
    CHECK(riordan_to_bush(LatticePath::parse("UUDD")).str() == "((()())())");
    CHECK(riordan_to_bush(LatticePath()).str() == "()");
    CHECK_THROWS_AS(riordan_to_bush(LatticePath::parse("HUD")), PreconditionError);
    CHECK_THROWS_AS(riordan_to_bush(LatticePath::parse("UDD")), PreconditionError);
}

TEST_CASE("internal_vertex_count") {
    CHECK(PlaneTree::parse("()").internal_vertex_count() == 0);
    CHECK(PlaneTree::parse("(()())").internal_vertex_count() == 1);
    CHECK(riordan_to_bush(LatticePath::parse("UUDD")).internal_vertex_count() == 2);
}

TEST_CASE("coding is a bijection onto the Riordan paths") {
    for (int n = 0; n <= 10; ++n) {
        std::set<std::string> images;
        for (const std::string& paren : enumerate_short_bushes(n)) {
            PlaneTree bush = PlaneTree::parse(paren);
            CHECK(bush.is_short_bush());
            CHECK(bush.edge_count() == n);
            LatticePath path = bush_to_riordan(bush);
            CHECK(path.size() == n);
            CHECK(validate(path, PathClass::Riordan));
            CHECK(images.insert(path.str()).second);
            CHECK(riordan_to_bush(path).str() == paren);
        }
        std::set<std::string> riordan_paths;
        for (const LatticePath& p : enumerate_paths(PathClass::Riordan, n))
            riordan_paths.insert(p.str());
        CHECK(images == riordan_paths);
    }
}

TEST_CASE("internal vertex distribution matches the counting formula") {
    for (int n = 0; n <= 10; ++n) {
        std::map<int, long long> dist;
        for (const std::string& paren : enumerate_short_bushes(n))
            ++dist[PlaneTree::parse(paren).internal_vertex_count()];
        for (int k = 0; k <= n; ++k) {
            long long got = dist.count(k) ? dist[k] : 0;
            CHECK(to_count(got) == bush_count_by_internal(n, k));
        }
    }
}

TEST_CASE("up and down steps pair off") {
    for (int n = 0; n <= 10; ++n) {
        for (const std::string& paren : enumerate_short_bushes(n)) {
            LatticePath path = bush_to_riordan(PlaneTree::parse(paren));
            int ups = 0, downs = 0;
            for (Step s : path.steps()) {
                if (s == Step::Up) ++ups;
                if (s == Step::Down) ++downs;
            }
            CHECK(ups == downs);
            CHECK(path.size() == n);
        }
    }
}

}  // TEST_SUITE
