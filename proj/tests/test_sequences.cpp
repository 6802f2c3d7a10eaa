#include <doctest.h>

#include "oracles.hpp"
#include "sequences.hpp"

using namespace riordan;

TEST_SUITE("sequences") {

TEST_CASE("riordan_closed matches the reference sequence") {
    const char* expected[] = {"1", "0", "1", "1", "3", "6", "15", "36", "91", "232"};
    for (int n = 0; n <= 9; ++n) CHECK(riordan_closed(n).get_str() == expected[n]);
}

TEST_CASE("riordan_recurrence base cases and values") {
    CHECK(riordan_recurrence(0) == 1);
    CHECK(riordan_recurrence(1) == 0);
    CHECK(riordan_recurrence(2) == 1);
    CHECK(riordan_recurrence(6) == 15);
    CHECK(riordan_recurrence(20) == riordan_closed(20));
}

TEST_CASE("riordan routes agree through n = 30") {
    for (int n = 0; n <= 30; ++n) {
        CHECK(riordan_closed(n) == riordan_recurrence(n));
        CHECK(riordan_from_catalan(n) == riordan_recurrence(n));
    }
}

TEST_CASE("catalan closed formula") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    // Independent count of Dyck paths of length 6.
    CHECK(oracle::brute_paths("dyck", 6).size() == 5);
    CHECK(catalan(10) == 16796);
    for (int n = 0; n <= 8; ++n)
        CHECK(catalan(n) == Count(static_cast<long>(oracle::brute_paths("dyck", 2 * n).size())));
}

TEST_CASE("catalan_from_riordan") {
    CHECK(catalan_from_riordan(0) == 1);
    CHECK(catalan_from_riordan(4) == 14);  // 1*1 + 4*0 + 6*1 + 4*1 + 1*3
    CHECK(catalan_from_riordan(12) == catalan(12));
    for (int n = 0; n <= 30; ++n) CHECK(catalan_from_riordan(n) == catalan(n));
}

TEST_CASE("riordan_from_catalan") {
    CHECK(riordan_from_catalan(1) == 0);
    CHECK(riordan_from_catalan(4) == 3);
    CHECK(riordan_from_catalan(15) == riordan_closed(15));
}

TEST_CASE("motzkin numbers against path enumeration") {
    CHECK(motzkin(0) == 1);
    CHECK(motzkin(4) == 9);
    CHECK(motzkin(6) == 51);
    for (int n = 0; n <= 9; ++n)
        CHECK(motzkin(n) == Count(static_cast<long>(oracle::brute_paths("motzkin", n).size())));
}

TEST_CASE("labelled_forest_count") {
    CHECK(labelled_forest_count(4, 1) == 120);  // C(5,1) C(2,0) 4!
    CHECK(labelled_forest_count(4, 3) == 0);    // C(0,2) = 0
    Count sum = 0;
    for (int k = 1; k <= 8; ++k) sum += labelled_forest_count(8, k);
    CHECK(sum == Count(362880) * 91);  // 9! r_8
    CHECK_THROWS_AS(labelled_forest_count(0, 1), PreconditionError);
    CHECK_THROWS_AS(labelled_forest_count(3, 0), PreconditionError);
}

TEST_CASE("bush_count_by_internal") {
    CHECK(bush_count_by_internal(4, 1) == 1);
    CHECK(bush_count_by_internal(4, 2) == 2);
    CHECK(bush_count_by_internal(2, 1) == 1);
    CHECK(bush_count_by_internal(0, 0) == 1);  // the lone vertex
    CHECK(bush_count_by_internal(0, 1) == 0);
    CHECK(bush_count_by_internal(1, 1) == 0);
    for (int n = 2; n <= 20; ++n) {
        Count sum = 0;
        for (int k = 0; k <= n; ++k) sum += bush_count_by_internal(n, k);
        CHECK(sum == riordan_recurrence(n));
    }
}

TEST_CASE("negative indices are rejected") {
    CHECK_THROWS_AS(riordan_closed(-1), PreconditionError);
    CHECK_THROWS_AS(riordan_recurrence(-2), PreconditionError);
    CHECK_THROWS_AS(catalan(-1), PreconditionError);
    CHECK_THROWS_AS(motzkin(-1), PreconditionError);
}

}  // TEST_SUITE
