#include <doctest.h>

#include <map>
#include <set>

#include "bijections.hpp"
#include "oracles.hpp"
#include "sequences.hpp"

using namespace riordan;

namespace {

const char kFigure2[] = "UHHDUUHHDHUUDDHHD";
const char kEq8[] = "4 1 2 3 9 5 13 6 7 8 10 14 11 17 12 15 16";

LatticePath path(const char* text) { return LatticePath::parse(text); }

CanonicalDecomposition decomp(std::initializer_list<std::pair<int, int>> pairs) {
    CanonicalDecomposition d;
    d.pairs = pairs;
    return d;
}

}  // namespace

TEST_SUITE("bijections") {

TEST_CASE("dyck_pair_encode") {
    CHECK(dyck_pair_encode(path("UUDD")).str() == "UD");
    CHECK(dyck_pair_encode(path("UDUD")).str() == "WW");
    CHECK(dyck_pair_encode(path("UUDDUD")).str() == "UDW");
    CHECK(dyck_pair_encode(LatticePath()).empty());
    CHECK_THROWS_AS(dyck_pair_encode(path("UHD")), PreconditionError);
    CHECK_THROWS_AS(dyck_pair_encode(path("UDD")), PreconditionError);
}

TEST_CASE("dyck_pair_decode") {
    CHECK(dyck_pair_decode(path("UD")).str() == "UUDD");
    CHECK(dyck_pair_decode(path("W")).str() == "UD");
    CHECK_THROWS_AS(dyck_pair_decode(path("H")), PreconditionError);
}

TEST_CASE("dyck pairing is a bijection onto the wavy-clean paths") {
    for (int n = 0; n <= 8; ++n) {
        std::set<std::string> images;
        for (const LatticePath& d : enumerate_paths(PathClass::Dyck, 2 * n)) {
            LatticePath m = dyck_pair_encode(d);
            CHECK(m.size() == n);
            CHECK(validate(m, PathClass::TwoMotzkinNoStraightOnAxis));
            CHECK(images.insert(m.str()).second);
            CHECK(dyck_pair_decode(m) == d);
        }
        std::set<std::string> codomain;
        for (const LatticePath& m : enumerate_paths(PathClass::TwoMotzkinNoStraightOnAxis, n))
            codomain.insert(m.str());
        CHECK(images == codomain);
    }
}

TEST_CASE("remove_wavy and insert_wavy") {
    auto [r1, p1] = remove_wavy(path("WW"));
    CHECK(r1.empty());
    CHECK(p1 == std::vector<int>{0, 1});
    auto [r2, p2] = remove_wavy(path("UWD"));
    CHECK(r2.str() == "UD");
    CHECK(p2 == std::vector<int>{1});
    auto [r3, p3] = remove_wavy(path("UDW"));
    CHECK(r3.str() == "UD");
    CHECK(p3 == std::vector<int>{2});

    CHECK(insert_wavy(path("UD"), {1}).str() == "UWD");
    CHECK(insert_wavy(LatticePath(), {0}).str() == "W");
    CHECK(insert_wavy(path("UHD"), {0, 4}).str() == "WUHDW");
    CHECK_THROWS_AS(insert_wavy(path("UD"), {3}), PreconditionError);
    CHECK_THROWS_AS(insert_wavy(path("UD"), {1, 1}), PreconditionError);
    CHECK_THROWS_AS(insert_wavy(path("HUD"), {0}), PreconditionError);
}

TEST_CASE("wavy fibers have binomial sizes") {
    for (int n = 0; n <= 8; ++n) {
        std::map<std::string, long long> fiber;
        for (const LatticePath& m : enumerate_paths(PathClass::TwoMotzkinNoStraightOnAxis, n)) {
            auto [residue, positions] = remove_wavy(m);
            CHECK(insert_wavy(residue, positions) == m);
            ++fiber[residue.str()];
        }
        Count total = 0;
        for (const auto& [residue, size] : fiber) {
            CHECK(to_count(size) == binomial(n, static_cast<long>(residue.size())));
            total += to_count(size);
        }
        CHECK(total == catalan(n));
    }
}

TEST_CASE("strip_decompose") {
    CHECK(strip_decompose(path(kFigure2)) ==
          decomp({{3, 1}, {8, 5}, {12, 7}, {13, 12}, {16, 14}}));
    CHECK(strip_decompose(path("HHH")).empty());
    CHECK(strip_decompose(path("UD")) == decomp({{1, 1}}));
    CHECK_THROWS_AS(strip_decompose(path("UDD")), PreconditionError);
    CHECK_THROWS_AS(strip_decompose(path("UWD")), PreconditionError);
}

TEST_CASE("phi") {
    CHECK(phi(path(kFigure2)).str() == kEq8);
    CHECK(phi(path("H")).str() == "1");
    CHECK(phi(path("UD")).str() == "2 1");
    CHECK(phi(LatticePath()).size() == 0);
    CHECK_THROWS_AS(phi(path("UDD")), PreconditionError);
}

TEST_CASE("strip_insert") {
    LatticePath flat(std::vector<Step>(17, Step::Level));
    LatticePath first = strip_insert(flat, 3, 1);
    CHECK(first.str() == "UHHD" + std::string(13, 'H'));
    LatticePath second = strip_insert(first, 8, 5);
    CHECK(second.str() == "UHHDUHHHD" + std::string(8, 'H'));
    CHECK(strip_decompose(second) == decomp({{3, 1}, {8, 5}}));

    LatticePath rebuilt(std::vector<Step>(17, Step::Level));
    for (auto [h, t] : {std::pair{3, 1}, {8, 5}, {12, 7}, {13, 12}, {16, 14}})
        rebuilt = strip_insert(rebuilt, h, t);
    CHECK(rebuilt.str() == kFigure2);

    CHECK_THROWS_AS(strip_insert(flat, 17, 1), PreconditionError);  // head beyond n-1
    CHECK_THROWS_AS(strip_insert(flat, 3, 4), PreconditionError);   // tail > head
    CHECK_THROWS_AS(strip_insert(path("UDHH"), 1, 1), PreconditionError);  // x = head not flat
}

TEST_CASE("phi_inverse") {
    CHECK(phi_inverse(Permutation::parse(kEq8)).str() == kFigure2);
    CHECK(phi_inverse(Permutation::identity(4)).str() == "HHHH");
    Permutation p = Permutation::parse("3 1 5 2 6 4");
    CHECK(phi(phi_inverse(p)) == p);
    CHECK_THROWS_AS(phi_inverse(Permutation::parse("3 2 1")), PreconditionError);
}

TEST_CASE("phi is a bijection with the stated images") {
    for (int n = 0; n <= 8; ++n) {
        std::set<std::string> motzkin_images, riordan_images;
        for (const LatticePath& p : enumerate_paths(PathClass::Motzkin, n)) {
            Permutation image = phi(p);
            CHECK(motzkin_images.insert(image.str()).second);
            CHECK(phi_inverse(image) == p);
            if (validate(p, PathClass::Riordan)) riordan_images.insert(image.str());
        }
        std::set<std::string> avoiders, deranged;
        for (const Permutation& q : enumerate_avoiders(n, false)) avoiders.insert(q.str());
        for (const Permutation& q : enumerate_avoiders(n, true)) deranged.insert(q.str());
        CHECK(motzkin_images == avoiders);
        CHECK(riordan_images == deranged);
    }
}

TEST_CASE("fixed points correspond to axis level steps") {
    for (int n = 0; n <= 8; ++n)
        for (const LatticePath& p : enumerate_paths(PathClass::Motzkin, n)) {
            std::vector<int> expected;
            for (int x : axis_level_labels(p)) expected.push_back(x + 1);
            CHECK(fixed_points(phi(p)) == expected);
        }
}

TEST_CASE("strip parameters count the axis level steps") {
    for (int n = 0; n <= 8; ++n)
        for (const LatticePath& p : enumerate_paths(PathClass::Motzkin, n)) {
            CanonicalDecomposition d = strip_decompose(p);
            if (d.empty()) continue;
            std::vector<int> labels = axis_level_labels(p);
            int leading = 0;
            while (leading < static_cast<int>(labels.size()) &&
                   labels[static_cast<std::size_t>(leading)] == leading)
                ++leading;
            int trailing = 0;
            while (trailing < static_cast<int>(labels.size()) &&
                   labels[labels.size() - 1 - static_cast<std::size_t>(trailing)] == n - 1 - trailing)
                ++trailing;
            CHECK(d.pairs.front().second - 1 == leading);
            CHECK(n - 1 - d.pairs.back().first == trailing);
            long long gaps = 0;
            for (std::size_t i = 0; i + 1 < d.pairs.size(); ++i)
                if (d.pairs[i].first + 1 < d.pairs[i + 1].second)
                    gaps += d.pairs[i + 1].second - d.pairs[i].first - 2;
            CHECK(gaps == static_cast<long long>(labels.size()) - leading - trailing);
        }
}

TEST_CASE("area minus up heights equals inversions") {
    CHECK(area(path(kFigure2)) - up_height_sum(path(kFigure2)) == 18);
    for (int n = 0; n <= 8; ++n)
        for (const LatticePath& p : enumerate_paths(PathClass::Riordan, n))
            CHECK(area(p) - up_height_sum(p) == inversion_number(phi(p)));
}

}  // TEST_SUITE
