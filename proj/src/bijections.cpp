#include "bijections.hpp"

#include <algorithm>

namespace riordan {

LatticePath dyck_pair_encode(const LatticePath& dyck) {
    require_class(dyck, PathClass::Dyck, "dyck_pair_encode");
    require(dyck.size() % 2 == 0, "dyck_pair_encode: path length must be even");
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(dyck.size() / 2));
    for (int i = 0; i + 1 < dyck.size(); i += 2) {
        bool first_up = dyck.at(i) == Step::Up;
        bool second_up = dyck.at(i + 1) == Step::Up;
        if (first_up && second_up)
            out.push_back(Step::Up);
        else if (first_up)
            out.push_back(Step::Wavy);
        else if (second_up)
            out.push_back(Step::Level);
        else
            out.push_back(Step::Down);
    }
    LatticePath result(std::move(out));
    internal_check(validate(result, PathClass::TwoMotzkinNoStraightOnAxis),
                   "dyck_pair_encode: image has a straight level step on the axis");
    return result;
}

LatticePath dyck_pair_decode(const LatticePath& two_motzkin) {
    require_class(two_motzkin, PathClass::TwoMotzkinNoStraightOnAxis, "dyck_pair_decode");
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(two_motzkin.size()) * 2);
    for (Step s : two_motzkin.steps()) {
        switch (s) {
            case Step::Up: out.push_back(Step::Up); out.push_back(Step::Up); break;
            case Step::Wavy: out.push_back(Step::Up); out.push_back(Step::Down); break;
            case Step::Level: out.push_back(Step::Down); out.push_back(Step::Up); break;
            case Step::Down: out.push_back(Step::Down); out.push_back(Step::Down); break;
        }
    }
    LatticePath result(std::move(out));
    internal_check(validate(result, PathClass::Dyck), "dyck_pair_decode: image is not a Dyck path");
    return result;
}

std::pair<LatticePath, std::vector<int>> remove_wavy(const LatticePath& two_motzkin) {
    require_class(two_motzkin, PathClass::TwoMotzkinNoStraightOnAxis, "remove_wavy");
    std::vector<Step> kept;
    std::vector<int> positions;
    for (int i = 0; i < two_motzkin.size(); ++i) {
        if (two_motzkin.at(i) == Step::Wavy)
            positions.push_back(i);
        else
            kept.push_back(two_motzkin.at(i));
    }
    LatticePath result(std::move(kept));
    internal_check(validate(result, PathClass::Riordan),
                   "remove_wavy: residue is not a Riordan path");
    return {std::move(result), std::move(positions)};
}

LatticePath insert_wavy(const LatticePath& riordan, const std::vector<int>& positions) {
    require_class(riordan, PathClass::Riordan, "insert_wavy");
    int total = riordan.size() + static_cast<int>(positions.size());
    std::vector<bool> wavy(static_cast<std::size_t>(total), false);
    for (int pos : positions) {
        require(pos >= 0 && pos < total, "insert_wavy: position out of range");
        require(!wavy[static_cast<std::size_t>(pos)], "insert_wavy: duplicate position");
        wavy[static_cast<std::size_t>(pos)] = true;
    }
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(total));
    int src = 0;
    for (int i = 0; i < total; ++i) {
        if (wavy[static_cast<std::size_t>(i)])
            out.push_back(Step::Wavy);
        else
            out.push_back(riordan.at(src++));
    }
    LatticePath result(std::move(out));
    internal_check(validate(result, PathClass::TwoMotzkinNoStraightOnAxis),
                   "insert_wavy: result is not wavy-on-axis clean");
    return result;
}

namespace {

int last_index_of(const std::vector<Step>& s, Step kind) {
    for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i)
        if (s[static_cast<std::size_t>(i)] == kind) return i;
    return -1;
}

std::vector<int> heights_of(const std::vector<Step>& s) {
    std::vector<int> h(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) h[i + 1] = h[i] + step_delta(s[i]);
    return h;
}

}  // namespace

CanonicalDecomposition strip_decompose(const LatticePath& motzkin) {
    require_class(motzkin, PathClass::Motzkin, "strip_decompose");
    std::vector<Step> s = motzkin.steps();
    std::vector<std::pair<int, int>> harvested;  // (h_k, t_k) first
    for (;;) {
        int u = last_index_of(s, Step::Up);
        if (u < 0) break;
        int d = last_index_of(s, Step::Down);
        internal_check(d > u, "strip_decompose: last down step must follow the last up step");
        std::vector<int> h = heights_of(s);
        internal_check(h[static_cast<std::size_t>(d) + 1] == 0,
                       "strip_decompose: last down step must end on the axis");
        int head = d + h[static_cast<std::size_t>(d)] - 1;
        internal_check(s[static_cast<std::size_t>(u) + 1] != Step::Up,
                       "strip_decompose: step after the last up step cannot be an up step");
        int tail = (u + 1) + h[static_cast<std::size_t>(u) + 1] - 1;
        harvested.emplace_back(head, tail);
        // Turning A->B and E->F into level steps lowers everything between.
        s[static_cast<std::size_t>(u)] = Step::Level;
        s[static_cast<std::size_t>(d)] = Step::Level;
    }
    CanonicalDecomposition out;
    out.pairs.assign(harvested.rbegin(), harvested.rend());
    out.check();
    internal_check(satisfies_avoidance_condition(out),
                   "strip_decompose: parameters violate the avoidance condition");
    internal_check(out.empty() || out.pairs.back().first <= motzkin.size() - 1,
                   "strip_decompose: h_k exceeds n-1");
    return out;
}

Permutation phi(const LatticePath& motzkin) {
    CanonicalDecomposition d = strip_decompose(motzkin);
    Permutation p = apply_decomposition(motzkin.size(), d);
    internal_check(satisfies_avoidance_condition(extract_decomposition(p)),
                   "phi: image does not avoid the patterns");
    return p;
}

LatticePath strip_insert(const LatticePath& motzkin, int head, int tail) {
    require_class(motzkin, PathClass::Motzkin, "strip_insert");
    int n = motzkin.size();
    require(tail >= 1 && tail <= head, "strip_insert: needs 1 <= tail <= head");
    require(head <= n - 1, "strip_insert: head must be at most n-1");
    std::vector<Step> s = motzkin.steps();
    std::vector<int> h = heights_of(s);
    require(h[static_cast<std::size_t>(head)] == 0, "strip_insert: point at x = head is not on the axis");
    for (int i = head; i < n; ++i)
        require(s[static_cast<std::size_t>(i)] == Step::Level,
                "strip_insert: steps from x = head on must be level steps on the axis");
    // B' = first point after the last up step whose coordinate sum is `tail`;
    // after the last up step the sum x + y never decreases, so it is unique.
    int start = std::max(last_index_of(s, Step::Up) + 1, 1);
    int xb = -1;
    for (int x = start; x <= n; ++x) {
        if (x + h[static_cast<std::size_t>(x)] == tail) {
            xb = x;
            break;
        }
    }
    require(xb >= 1, "strip_insert: no point after the last up step has coordinate sum tail");
    require(s[static_cast<std::size_t>(xb - 1)] == Step::Level,
            "strip_insert: step entering B' is not a level step");
    internal_check(xb <= head, "strip_insert: B' lies beyond the head point");
    s[static_cast<std::size_t>(xb - 1)] = Step::Up;
    s[static_cast<std::size_t>(head)] = Step::Down;
    LatticePath result(std::move(s));
    internal_check(validate(result, PathClass::Motzkin), "strip_insert: result is not a Motzkin path");
    return result;
}

LatticePath phi_inverse(const Permutation& p) {
    CanonicalDecomposition d = extract_decomposition(p);
    if (!satisfies_avoidance_condition(d))
        throw PreconditionError("phi_inverse: permutation does not avoid (321, 3bar142)");
    int n = p.size();
    LatticePath path(std::vector<Step>(static_cast<std::size_t>(n), Step::Level));
    for (const auto& [head, tail] : d.pairs) path = strip_insert(path, head, tail);
    internal_check(phi(path) == p, "phi_inverse: phi of the result differs from the input");
    return path;
}

}  // namespace riordan
