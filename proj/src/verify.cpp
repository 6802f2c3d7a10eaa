#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "bijections.hpp"
#include "paths.hpp"
#include "permutations.hpp"
#include "psi.hpp"
#include "sequences.hpp"
#include "serialize.hpp"
#include "trees.hpp"

namespace riordan {

namespace {

using Json = nlohmann::json;

struct Property {
    std::string suite;
    std::string name;
    std::function<void(int, PropertyResult&)> run;
};

std::string range_str(int lo, int hi) {
    return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

void fail(PropertyResult& r, Json counterexample) {
    if (!r.pass) return;  // keep the first counterexample
    r.pass = false;
    r.counterexample = counterexample.dump();
}

long long count_paths(PathClass cls, int n) {
    PathEnumerator e(cls, n);
    long long c = 0;
    while (e.next()) ++c;
    return c;
}

// ------------------------------------------------------------------ counts

const char* kRiordanReference[] = {"1", "0", "1", "1", "3", "6", "15", "36", "91", "232"};

void prop_riordan_reference(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 9);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::string want = kRiordanReference[n];
        for (const char* route : {"closed", "recurrence", "from-catalan"}) {
            Count got = route == std::string("closed")        ? riordan_closed(n)
                        : route == std::string("recurrence")  ? riordan_recurrence(n)
                                                              : riordan_from_catalan(n);
            if (got.get_str() != want)
                fail(r, {{"n", n}, {"route", route}, {"expected", want}, {"got", got.get_str()}});
        }
    }
}

void prop_riordan_routes(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 30);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        Count a = riordan_closed(n), b = riordan_recurrence(n), c = riordan_from_catalan(n);
        if (a != b || b != c)
            fail(r, {{"n", n},
                     {"closed", a.get_str()},
                     {"recurrence", b.get_str()},
                     {"from_catalan", c.get_str()}});
    }
}

void prop_catalan_routes(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 30);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        Count a = catalan(n), b = catalan_from_riordan(n);
        if (a != b) fail(r, {{"n", n}, {"closed", a.get_str()}, {"from_riordan", b.get_str()}});
    }
}

void prop_bush_internal_sum(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 20);
    r.range = range_str(2, hi);
    for (int n = 2; n <= hi; ++n) {
        Count sum = 0;
        for (int k = 0; k <= n; ++k) sum += bush_count_by_internal(n, k);
        if (sum != riordan_recurrence(n))
            fail(r, {{"n", n}, {"sum", sum.get_str()}, {"riordan", riordan_recurrence(n).get_str()}});
    }
}

void prop_forest_relation(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 30);
    r.range = range_str(1, hi);
    for (int n = 1; n <= hi; ++n) {
        Count sum = 0;
        for (int k = 1; k <= n; ++k) sum += labelled_forest_count(n, k);
        Count want = factorial(static_cast<unsigned long>(n) + 1) * riordan_recurrence(n);
        if (sum != want) fail(r, {{"n", n}, {"sum", sum.get_str()}, {"expected", want.get_str()}});
    }
}

void prop_riordan_path_count(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 14);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        long long got = count_paths(PathClass::Riordan, n);
        if (to_count(got) != riordan_recurrence(n))
            fail(r, {{"n", n}, {"enumerated", got}, {"expected", riordan_recurrence(n).get_str()}});
    }
}

void prop_motzkin_path_count(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 14);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        long long got = count_paths(PathClass::Motzkin, n);
        if (to_count(got) != motzkin(n))
            fail(r, {{"n", n}, {"enumerated", got}, {"expected", motzkin(n).get_str()}});
    }
}

void prop_dyck_path_count(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        long long got = count_paths(PathClass::Dyck, 2 * n);
        if (to_count(got) != catalan(n))
            fail(r, {{"n", n}, {"enumerated", got}, {"expected", catalan(n).get_str()}});
        if (count_paths(PathClass::Dyck, 2 * n + 1) != 0)
            fail(r, {{"n", n}, {"detail", "odd-length dyck enumeration not empty"}});
    }
}

void prop_two_motzkin_count(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        long long got = count_paths(PathClass::TwoMotzkinNoStraightOnAxis, n);
        if (to_count(got) != catalan(n))
            fail(r, {{"n", n}, {"enumerated", got}, {"expected", catalan(n).get_str()}});
    }
}

// ------------------------------------------------------------------- trees

void prop_bush_count(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        auto bushes = enumerate_short_bushes(n);
        if (Count(static_cast<long>(bushes.size())) != riordan_recurrence(n))
            fail(r, {{"n", n},
                     {"enumerated", bushes.size()},
                     {"expected", riordan_recurrence(n).get_str()}});
        if (!std::is_sorted(bushes.begin(), bushes.end()))
            fail(r, {{"n", n}, {"detail", "bush enumeration not sorted"}});
    }
}

void prop_bush_round_trip(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::set<std::string> images;
        for (const std::string& paren : enumerate_short_bushes(n)) {
            PlaneTree bush = PlaneTree::parse(paren);
            LatticePath path = bush_to_riordan(bush);
            if (!validate(path, PathClass::Riordan) || path.size() != n) {
                fail(r, {{"n", n}, {"bush", paren}, {"path", path.str()}});
                continue;
            }
            if (!images.insert(path.str()).second)
                fail(r, {{"n", n}, {"bush", paren}, {"detail", "duplicate image"}});
            if (riordan_to_bush(path).str() != paren)
                fail(r, {{"n", n}, {"bush", paren}, {"path", path.str()}, {"detail", "round trip"}});
        }
        std::set<std::string> all;
        for (const LatticePath& p : enumerate_paths(PathClass::Riordan, n)) all.insert(p.str());
        if (images != all) fail(r, {{"n", n}, {"detail", "image is not all of the Riordan paths"}});
    }
}

void prop_bush_internal_distribution(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::map<int, long long> dist;
        for (const std::string& paren : enumerate_short_bushes(n))
            ++dist[PlaneTree::parse(paren).internal_vertex_count()];
        for (int k = 0; k <= n; ++k) {
            Count want = bush_count_by_internal(n, k);
            long long got = dist.count(k) ? dist[k] : 0;
            if (to_count(got) != want)
                fail(r, {{"n", n}, {"k", k}, {"enumerated", got}, {"expected", want.get_str()}});
        }
    }
}

void prop_bush_path_balance(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        for (const std::string& paren : enumerate_short_bushes(n)) {
            LatticePath path = bush_to_riordan(PlaneTree::parse(paren));
            long long ups = 0, downs = 0;
            for (Step s : path.steps()) {
                if (s == Step::Up) ++ups;
                if (s == Step::Down) ++downs;
            }
            if (ups != downs || path.size() != n)
                fail(r, {{"n", n}, {"bush", paren}, {"ups", ups}, {"downs", downs}});
        }
    }
}

// -------------------------------------------------------------------- dyck

void prop_dyck_pair_bijection(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 9);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::set<std::string> images;
        long long dycks = 0;
        PathEnumerator e(PathClass::Dyck, 2 * n);
        while (auto d = e.next()) {
            ++dycks;
            LatticePath m = dyck_pair_encode(*d);
            if (!validate(m, PathClass::TwoMotzkinNoStraightOnAxis) || m.size() != n)
                fail(r, {{"n", n}, {"dyck", d->str()}, {"image", m.str()}});
            if (!images.insert(m.str()).second)
                fail(r, {{"n", n}, {"image", m.str()}, {"detail", "not injective"}});
            if (!(dyck_pair_decode(m) == *d))
                fail(r, {{"n", n}, {"dyck", d->str()}, {"detail", "decode round trip"}});
        }
        std::set<std::string> codomain;
        for (const LatticePath& m : enumerate_paths(PathClass::TwoMotzkinNoStraightOnAxis, n))
            codomain.insert(m.str());
        if (images != codomain) fail(r, {{"n", n}, {"detail", "image is not the whole codomain"}});
    }
}

void prop_wavy_fibers(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::map<std::string, long long> fiber;
        long long total = 0;
        PathEnumerator e(PathClass::TwoMotzkinNoStraightOnAxis, n);
        while (auto m = e.next()) {
            auto [res, positions] = remove_wavy(*m);
            if (!(insert_wavy(res, positions) == *m))
                fail(r, {{"n", n}, {"path", m->str()}, {"detail", "insert_wavy round trip"}});
            ++fiber[res.str()];
            ++total;
        }
        for (const auto& [residue, size] : fiber) {
            Count want = binomial(n, static_cast<long>(residue.size()));
            if (to_count(size) != want)
                fail(r, {{"n", n}, {"residue", residue}, {"fiber", size}, {"expected", want.get_str()}});
        }
        Count identity = 0;
        for (int k = 0; k <= n; ++k) identity += binomial(n, k) * riordan_recurrence(k);
        if (to_count(total) != catalan(n) || identity != catalan(n))
            fail(r, {{"n", n}, {"total", total}, {"catalan", catalan(n).get_str()}});
    }
}

// ----------------------------------------------------------------- patterns

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

void prop_filter_counts(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 8);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        long long avoiders = 0, deranged = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            if (avoids_321(p) && avoids_3bar142(p)) {
                ++avoiders;
                if (fixed_points(p).empty()) ++deranged;
            }
        });
        if (to_count(avoiders) != motzkin(n))
            fail(r, {{"n", n}, {"avoiders", avoiders}, {"motzkin", motzkin(n).get_str()}});
        if (to_count(deranged) != riordan_recurrence(n))
            fail(r, {{"n", n}, {"derangements", deranged}, {"riordan", riordan_recurrence(n).get_str()}});
    }
}

void prop_avoidance_characterization(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 7);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            bool avoids = avoids_321(p) && avoids_3bar142(p);
            bool cond = satisfies_avoidance_condition(extract_decomposition(p));
            if (avoids != cond)
                fail(r, {{"n", n}, {"permutation", p.str()}, {"avoids", avoids}, {"condition", cond}});
        });
    }
}

void prop_derangement_characterization(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 7);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            bool lhs = avoids_321(p) && avoids_3bar142(p) && fixed_points(p).empty();
            bool rhs = satisfies_derangement_condition(n, extract_decomposition(p));
            if (lhs != rhs)
                fail(r, {{"n", n}, {"permutation", p.str()}, {"avoiding_derangement", lhs}, {"condition", rhs}});
        });
    }
}

void prop_decomposition_round_trip(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 7);
    r.range = range_str(0, hi) + " exhaustive, n<=50 sampled";
    for (int n = 0; n <= hi; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!(apply_decomposition(n, extract_decomposition(p)) == p))
                fail(r, {{"n", n}, {"permutation", p.str()}});
        });
    }
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 50);
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        std::shuffle(word.begin(), word.end(), rng);
        Permutation p = Permutation::from_word(word);
        if (!(apply_decomposition(n, extract_decomposition(p)) == p))
            fail(r, {{"n", n}, {"permutation", p.str()}, {"detail", "random round trip"}});
    }
}

void prop_avoider_enumeration(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 9);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::vector<Permutation> avoiders = enumerate_avoiders(n, false);
        std::vector<Permutation> deranged = enumerate_avoiders(n, true);
        if (Count(static_cast<long>(avoiders.size())) != motzkin(n) ||
            Count(static_cast<long>(deranged.size())) != riordan_recurrence(n))
            fail(r, {{"n", n}, {"avoiders", avoiders.size()}, {"derangements", deranged.size()}});
        if (!std::is_sorted(avoiders.begin(), avoiders.end()) ||
            !std::is_sorted(deranged.begin(), deranged.end()))
            fail(r, {{"n", n}, {"detail", "enumeration not lexicographically sorted"}});
        if (n <= 7) {
            std::vector<Permutation> filtered, filtered_der;
            for_each_permutation(n, [&](const Permutation& p) {
                if (avoids_321(p) && avoids_3bar142(p)) {
                    filtered.push_back(p);
                    if (fixed_points(p).empty()) filtered_der.push_back(p);
                }
            });
            if (filtered != avoiders)
                fail(r, {{"n", n}, {"detail", "avoider list differs from the filter oracle"}});
            if (filtered_der != deranged)
                fail(r, {{"n", n}, {"detail", "derangement list differs from the filter oracle"}});
        }
    }
}

void prop_inversion_length(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 9);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        for (const CanonicalDecomposition& d : enumerate_avoider_decompositions(n, false)) {
            long long length = 0;
            for (const auto& [h, t] : d.pairs) length += h - t + 1;
            long long inv = inversion_number(apply_decomposition(n, d));
            if (inv != length)
                fail(r, {{"n", n}, {"decomposition", d.str()}, {"inversions", inv}, {"length", length}});
        }
    }
}

// --------------------------------------------------------------------- phi

const char kFigure2Path[] = "UHHDUUHHDHUUDDHHD";
const char kFigure2Permutation[] = "4 1 2 3 9 5 13 6 7 8 10 14 11 17 12 15 16";

void prop_figure2(int, PropertyResult& r) {
    r.range = "fixed";
    LatticePath p = LatticePath::parse(kFigure2Path);
    CanonicalDecomposition d = strip_decompose(p);
    CanonicalDecomposition want;
    want.pairs = {{3, 1}, {8, 5}, {12, 7}, {13, 12}, {16, 14}};
    if (!(d == want)) fail(r, {{"parameters", d.str()}, {"expected", want.str()}});
    Permutation image = phi(p);
    if (image.str() != kFigure2Permutation)
        fail(r, {{"phi", image.str()}, {"expected", kFigure2Permutation}});
    if (area(p) != 22 || up_height_sum(p) != 4 || inversion_number(image) != 18)
        fail(r, {{"area", area(p)}, {"up_height_sum", up_height_sum(p)},
                 {"inversions", inversion_number(image)}});
    if (!(phi_inverse(image) == p)) fail(r, {{"detail", "phi_inverse differs from the path"}});
}

void prop_phi_round_trip(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        PathEnumerator e(PathClass::Motzkin, n);
        while (auto p = e.next()) {
            if (!(phi_inverse(phi(*p)) == *p))
                fail(r, {{"n", n}, {"path", p->str()}});
        }
    }
}

void prop_phi_image(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        std::set<std::string> motzkin_images, riordan_images;
        PathEnumerator e(PathClass::Motzkin, n);
        while (auto p = e.next()) {
            std::string image = phi(*p).str();
            if (!motzkin_images.insert(image).second)
                fail(r, {{"n", n}, {"path", p->str()}, {"detail", "phi not injective"}});
            if (validate(*p, PathClass::Riordan)) riordan_images.insert(image);
        }
        std::set<std::string> avoiders, deranged;
        for (const Permutation& p : enumerate_avoiders(n, false)) avoiders.insert(p.str());
        for (const Permutation& p : enumerate_avoiders(n, true)) deranged.insert(p.str());
        if (motzkin_images != avoiders)
            fail(r, {{"n", n}, {"detail", "image of the Motzkin paths is not S_n(321,3bar142)"}});
        if (riordan_images != deranged)
            fail(r, {{"n", n}, {"detail", "image of the Riordan paths is not D_n(321,3bar142)"}});
    }
}

void prop_fixed_point_theorem(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        PathEnumerator e(PathClass::Motzkin, n);
        while (auto p = e.next()) {
            std::vector<int> expected;
            for (int x : axis_level_labels(*p)) expected.push_back(x + 1);
            std::vector<int> got = fixed_points(phi(*p));
            if (got != expected)
                fail(r, {{"n", n}, {"path", p->str()}, {"fixed_points", got}, {"expected", expected}});
        }
    }
}

void prop_corollary_34(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        PathEnumerator e(PathClass::Motzkin, n);
        while (auto p = e.next()) {
            CanonicalDecomposition d = strip_decompose(*p);
            if (d.empty()) continue;
            std::vector<int> labels = axis_level_labels(*p);
            int leading = 0;
            while (leading < static_cast<int>(labels.size()) && labels[static_cast<std::size_t>(leading)] == leading)
                ++leading;
            int trailing = 0;
            while (trailing < static_cast<int>(labels.size()) &&
                   labels[labels.size() - 1 - static_cast<std::size_t>(trailing)] == n - 1 - trailing)
                ++trailing;
            long long middle = static_cast<long long>(labels.size()) - leading - trailing;
            long long gap_sum = 0;
            for (std::size_t i = 0; i + 1 < d.pairs.size(); ++i)
                if (d.pairs[i].first + 1 < d.pairs[i + 1].second)
                    gap_sum += d.pairs[i + 1].second - d.pairs[i].first - 2;
            if (d.pairs.front().second - 1 != leading || n - 1 - d.pairs.back().first != trailing ||
                gap_sum != middle)
                fail(r, {{"n", n}, {"path", p->str()}, {"parameters", d.str()},
                         {"leading", leading}, {"trailing", trailing}, {"middle", middle}});
        }
    }
}

void prop_corollary_36(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 10);
    r.range = range_str(0, hi);
    for (int n = 0; n <= hi; ++n) {
        PathEnumerator e(PathClass::Riordan, n);
        while (auto p = e.next()) {
            long long lhs = area(*p) - up_height_sum(*p);
            long long rhs = inversion_number(phi(*p));
            if (lhs != rhs)
                fail(r, {{"n", n}, {"path", p->str()}, {"area_minus_heights", lhs}, {"inversions", rhs}});
        }
    }
}

// --------------------------------------------------------------------- psi

void prop_psi_paper_examples(int, PropertyResult& r) {
    r.range = "fixed";
    struct Case {
        const char* element;
        const char* image;
    };
    // The worked images of the five construction cases for n = 4.
    const Case cases[] = {
        {"copy1:UD", "UDUD"},   {"copy2:UD", "U*DUD"},  {"copy3:UD", "UD*UD"},
        {"UaD", "UUDD"},        {"UDa", "U*UDD"},       {"UbD", "UU*DD"},
        {"UDb", "UDU*D"},       {"UcD", "UUD*D"},       {"UDc", "UDUD*"},
        {"U1HD", "UH*HD"},      {"UH1D", "UHH*D"},      {"UHD1", "UHHD"},
        {"U2HD", "U*HHD"},      {"UH2D", "UUDD*"},      {"UHD2", "UHHD*"},
    };
    for (const Case& c : cases) {
        PsiDomainElement e = PsiDomainElement::parse(c.element);
        StarredPath got = psi(e, 4);
        if (got.str() != c.image)
            fail(r, {{"element", c.element}, {"got", got.str()}, {"expected", c.image}});
        PsiDomainElement back = psi_inverse(StarredPath::parse(c.image), 4);
        if (!(back == e))
            fail(r, {{"image", c.image}, {"inverse", back.str()}, {"expected", c.element}});
    }
}

void prop_psi_cardinalities(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(2, hi);
    for (int n = 2; n <= hi; ++n) {
        Count domain = Count(static_cast<long>(psi_domain(n).size()));
        Count codomain = Count(static_cast<long>(psi_codomain(n).size()));
        Count lhs = Count(n + 1) * riordan_recurrence(n);
        Count rhs = Count(n - 1) * (2 * riordan_recurrence(n - 1) + 3 * riordan_recurrence(n - 2));
        if (domain != rhs || codomain != lhs || lhs != rhs)
            fail(r, {{"n", n}, {"domain", domain.get_str()}, {"codomain", codomain.get_str()},
                     {"recurrence_lhs", lhs.get_str()}, {"recurrence_rhs", rhs.get_str()}});
    }
}

void prop_psi_bijectivity(int max_n, PropertyResult& r) {
    int hi = std::min(max_n, 12);
    r.range = range_str(2, hi);
    for (int n = 2; n <= hi; ++n) {
        std::set<std::string> images;
        for (const PsiDomainElement& e : psi_domain(n)) {
            StarredPath s = psi(e, n);
            if (!images.insert(s.str()).second)
                fail(r, {{"n", n}, {"element", e.str()}, {"image", s.str()}, {"detail", "not injective"}});
            PsiDomainElement back = psi_inverse(s, n);
            if (!(back == e))
                fail(r, {{"n", n}, {"element", e.str()}, {"image", s.str()}, {"inverse", back.str()}});
        }
        for (const StarredPath& s : psi_codomain(n)) {
            if (!images.count(s.str()))
                fail(r, {{"n", n}, {"starred", s.str()}, {"detail", "not in the image"}});
            if (!(psi(psi_inverse(s, n), n) == s))
                fail(r, {{"n", n}, {"starred", s.str()}, {"detail", "inverse round trip"}});
        }
    }
}

// ----------------------------------------------------------------- registry

const std::vector<Property>& all_properties() {
    static const std::vector<Property> props = {
        {"counts", "counts/riordan-reference-prefix", prop_riordan_reference},
        {"counts", "counts/riordan-route-agreement", prop_riordan_routes},
        {"counts", "counts/catalan-route-agreement", prop_catalan_routes},
        {"counts", "counts/bush-internal-sum", prop_bush_internal_sum},
        {"counts", "counts/forest-count-relation", prop_forest_relation},
        {"counts", "counts/riordan-path-count", prop_riordan_path_count},
        {"counts", "counts/motzkin-path-count", prop_motzkin_path_count},
        {"counts", "counts/dyck-path-count", prop_dyck_path_count},
        {"counts", "counts/two-motzkin-nostraight-count", prop_two_motzkin_count},
        {"trees", "trees/bush-count", prop_bush_count},
        {"trees", "trees/bush-riordan-round-trip", prop_bush_round_trip},
        {"trees", "trees/bush-internal-distribution", prop_bush_internal_distribution},
        {"trees", "trees/bush-path-balance", prop_bush_path_balance},
        {"dyck", "dyck/pair-encode-bijection", prop_dyck_pair_bijection},
        {"dyck", "dyck/wavy-fibers", prop_wavy_fibers},
        {"patterns", "patterns/filter-counts", prop_filter_counts},
        {"patterns", "patterns/avoidance-characterization", prop_avoidance_characterization},
        {"patterns", "patterns/derangement-characterization", prop_derangement_characterization},
        {"patterns", "patterns/decomposition-round-trip", prop_decomposition_round_trip},
        {"patterns", "patterns/avoider-enumeration", prop_avoider_enumeration},
        {"patterns", "patterns/inversion-length", prop_inversion_length},
        {"phi", "phi/figure-2-example", prop_figure2},
        {"phi", "phi/round-trip", prop_phi_round_trip},
        {"phi", "phi/image-equals-avoiders", prop_phi_image},
        {"phi", "phi/fixed-point-theorem", prop_fixed_point_theorem},
        {"phi", "phi/corollary-3.4", prop_corollary_34},
        {"phi", "phi/corollary-3.6", prop_corollary_36},
        {"psi", "psi/paper-examples", prop_psi_paper_examples},
        {"psi", "psi/cardinalities", prop_psi_cardinalities},
        {"psi", "psi/bijectivity", prop_psi_bijectivity},
    };
    return props;
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.pass; });
}

std::string VerificationReport::json() const {
    Json out;
    out["suite"] = suite;
    out["max_n"] = max_n;
    out["pass"] = passed();
    Json props = Json::array();
    for (const PropertyResult& p : properties) {
        Json item;
        item["name"] = p.name;
        item["range"] = p.range;
        item["pass"] = p.pass;
        item["counterexample"] = p.pass ? Json(nullptr) : Json::parse(p.counterexample);
        props.push_back(item);
    }
    out["properties"] = props;
    return out.dump();
}

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> suites = {"counts", "trees",    "dyck", "patterns",
                                                    "phi",    "psi", "all"};
    return suites;
}

VerificationReport run_verification(const std::string& suite, int max_n) {
    if (std::find(verification_suites().begin(), verification_suites().end(), suite) ==
        verification_suites().end())
        throw PreconditionError("verify: unknown suite '" + suite + "'");
    require(max_n >= 0, "verify: max_n must be nonnegative");
    VerificationReport report;
    report.suite = suite;
    report.max_n = max_n;
    auto start = std::chrono::steady_clock::now();
    for (const Property& prop : all_properties()) {
        if (suite != "all" && suite != prop.suite) continue;
        PropertyResult result;
        result.name = prop.name;
        try {
            prop.run(max_n, result);
        } catch (const std::exception& e) {
            fail(result, Json{{"error", e.what()}});
        }
        report.properties.push_back(std::move(result));
    }
    std::sort(report.properties.begin(), report.properties.end(),
              [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
    auto end = std::chrono::steady_clock::now();
    report.duration_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

}  // namespace riordan
