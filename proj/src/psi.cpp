#include "psi.hpp"

#include <algorithm>

namespace riordan {

PsiDomainElement PsiDomainElement::unlabelled_copy(int copy, LatticePath path) {
    PsiDomainElement e;
    e.kind = Kind::Copy;
    e.copy = copy;
    e.path = std::move(path);
    return e;
}

PsiDomainElement PsiDomainElement::abc(char label, int index, LatticePath path) {
    PsiDomainElement e;
    e.kind = Kind::Abc;
    e.label = label;
    e.index = index;
    e.path = std::move(path);
    return e;
}

PsiDomainElement PsiDomainElement::num(char label, int index, LatticePath path) {
    PsiDomainElement e;
    e.kind = Kind::Num;
    e.label = label;
    e.index = index;
    e.path = std::move(path);
    return e;
}

void PsiDomainElement::check(int n) const {
    require(n >= 2, "psi: defined for n >= 2 only");
    require_class(path, PathClass::Riordan, "psi element");
    switch (kind) {
        case Kind::Copy:
            require(copy >= 1 && copy <= 3, "psi element: copy must be 1, 2 or 3");
            require(path.size() == n - 2, "psi element: copy path must have length n-2");
            break;
        case Kind::Abc:
            require(label == 'a' || label == 'b' || label == 'c',
                    "psi element: label must be a, b or c");
            require(path.size() == n - 2, "psi element: labelled path must have length n-2");
            require(index >= 0 && index < path.size(), "psi element: label index out of range");
            break;
        case Kind::Num:
            require(label == '1' || label == '2', "psi element: label must be 1 or 2");
            require(path.size() == n - 1, "psi element: labelled path must have length n-1");
            require(index >= 0 && index < path.size(), "psi element: label index out of range");
            break;
    }
}

std::string PsiDomainElement::str() const {
    if (kind == Kind::Copy) return "copy" + std::to_string(copy) + ":" + path.str();
    std::string steps = path.str();
    std::string out;
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        out += steps[static_cast<std::size_t>(i)];
        if (i == index) out += label;
    }
    return out;
}

PsiDomainElement PsiDomainElement::parse(std::string_view text) {
    if (text.rfind("copy", 0) == 0) {
        std::size_t colon = text.find(':');
        if (colon == std::string_view::npos || colon != 5)
            throw ParseError("psi element parse: expected copy<1-3>:<steps>", 0);
        char c = text[4];
        if (c < '1' || c > '3') throw ParseError("psi element parse: copy must be 1, 2 or 3", 4);
        return unlabelled_copy(c - '0', LatticePath::parse(text.substr(colon + 1)));
    }
    std::string steps;
    int index = -1;
    char label = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'a' || c == 'b' || c == 'c' || c == '1' || c == '2') {
            if (label != 0) throw ParseError("psi element parse: more than one label", i);
            if (steps.empty()) throw ParseError("psi element parse: label before any step", i);
            label = c;
            index = static_cast<int>(steps.size()) - 1;
        } else {
            steps += c;
        }
    }
    if (label == 0) throw ParseError("psi element parse: no label found", text.size());
    LatticePath p = LatticePath::parse(steps);
    if (label == '1' || label == '2') return num(label, index, std::move(p));
    return abc(label, index, std::move(p));
}

void StarredPath::check(int n) const {
    require_class(path, PathClass::Riordan, "starred path");
    require(path.size() == n, "starred path: length must be n");
    if (star) require(*star >= 0 && *star < path.size(), "starred path: star index out of range");
}

std::string StarredPath::str() const {
    std::string steps = path.str();
    if (!star) return steps;
    std::string out;
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        out += steps[static_cast<std::size_t>(i)];
        if (i == *star) out += '*';
    }
    return out;
}

StarredPath StarredPath::parse(std::string_view text) {
    std::string steps;
    std::optional<int> star;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '*') {
            if (star) throw ParseError("starred path parse: more than one star", i);
            if (steps.empty()) throw ParseError("starred path parse: star before any step", i);
            star = static_cast<int>(steps.size()) - 1;
        } else {
            steps += text[i];
        }
    }
    return StarredPath{LatticePath::parse(steps), star};
}

bool StarredPath::operator<(const StarredPath& other) const {
    if (path.steps() != other.path.steps()) return path.steps() < other.path.steps();
    int a = star ? *star : -1;
    int b = other.star ? *other.star : -1;
    return a < b;
}

namespace {

std::vector<Step> splice(const std::vector<Step>& s, int at, std::initializer_list<Step> ins) {
    std::vector<Step> out;
    out.reserve(s.size() + ins.size());
    out.insert(out.end(), s.begin(), s.begin() + at);
    out.insert(out.end(), ins.begin(), ins.end());
    out.insert(out.end(), s.begin() + at, s.end());
    return out;
}

std::vector<Step> erase_at(const std::vector<Step>& s, int at) {
    std::vector<Step> out(s);
    out.erase(out.begin() + at);
    return out;
}

StarredPath checked(std::vector<Step> steps, std::optional<int> star, int n) {
    StarredPath out{LatticePath(std::move(steps)), star};
    try {
        out.check(n);
    } catch (const PreconditionError& e) {
        throw InternalError(std::string("psi: constructed image is malformed: ") + e.what());
    }
    return out;
}

}  // namespace

StarredPath psi(const PsiDomainElement& element, int n) {
    element.check(n);
    const std::vector<Step>& r = element.path.steps();
    std::vector<int> h = element.path.heights();

    if (element.kind == PsiDomainElement::Kind::Copy) {
        // Prepend UD / U*D / UD*.
        std::vector<Step> s = splice(r, 0, {Step::Up, Step::Down});
        std::optional<int> star;
        if (element.copy == 2) star = 0;
        if (element.copy == 3) star = 1;
        return checked(std::move(s), star, n);
    }

    int i = element.index;
    int k = h[static_cast<std::size_t>(i)];

    if (element.kind == PsiDomainElement::Kind::Abc) {
        if (element.label == 'a') {
            if (k == 0) {
                // The labelled step leaves the axis; close it one step later by
                // doubling its first axis-touching down step, and lead with an
                // extra up step.
                internal_check(r[static_cast<std::size_t>(i)] == Step::Up,
                               "psi: a-labelled axis step must be an up step");
                int j = -1;
                for (int q = i + 1; q < element.path.size(); ++q) {
                    if (r[static_cast<std::size_t>(q)] == Step::Down && h[static_cast<std::size_t>(q) + 1] == 0) {
                        j = q;
                        break;
                    }
                }
                internal_check(j >= 0, "psi: no axis-touching down step after the labelled up step");
                std::vector<Step> s = splice(r, j + 1, {Step::Down});
                s.insert(s.begin(), Step::Up);
                return checked(std::move(s), std::nullopt, n);
            }
            // Wedge a new U...D around the segment separating the labelled step
            // from the last up step below it, starring that up step.
            int j = -1;
            for (int q = i - 1; q >= 0; --q) {
                if (r[static_cast<std::size_t>(q)] == Step::Up && h[static_cast<std::size_t>(q)] == k - 1) {
                    j = q;
                    break;
                }
            }
            internal_check(j >= 0, "psi: no up step of height k-1 before the labelled step");
            std::vector<Step> s;
            s.insert(s.end(), r.begin(), r.begin() + j + 1);
            s.push_back(Step::Up);
            s.insert(s.end(), r.begin() + j + 1, r.begin() + i);
            s.push_back(Step::Down);
            s.insert(s.end(), r.begin() + i, r.end());
            return checked(std::move(s), j, n);
        }
        if (element.label == 'b') {
            std::vector<Step> s = splice(r, i + 1, {Step::Up, Step::Down});
            return checked(std::move(s), i + 1, n);
        }
        // label 'c'
        std::vector<Step> s = splice(r, i + 1, {Step::Up, Step::Down});
        return checked(std::move(s), i + 2, n);
    }

    // Kind::Num
    Step step = r[static_cast<std::size_t>(i)];
    if (element.label == '1') {
        if (step == Step::Down && k == 1) {
            // Flatten the matching up step (the nearest one starting on the
            // axis) into a level step and lead with an extra up step.
            int j = -1;
            for (int q = i - 1; q >= 0; --q) {
                if (r[static_cast<std::size_t>(q)] == Step::Up && h[static_cast<std::size_t>(q)] == 0) {
                    j = q;
                    break;
                }
            }
            internal_check(j >= 0, "psi: no axis-touching up step before the labelled down step");
            std::vector<Step> s(r);
            s[static_cast<std::size_t>(j)] = Step::Level;
            s.insert(s.begin(), Step::Up);
            return checked(std::move(s), std::nullopt, n);
        }
        std::vector<Step> s = splice(r, i + 1, {Step::Level});
        return checked(std::move(s), i + 1, n);
    }

    // label '2'
    if (step == Step::Up) {
        std::vector<Step> s = splice(r, i + 1, {Step::Level});
        return checked(std::move(s), i, n);
    }
    if (step == Step::Down) {
        std::vector<Step> s = splice(r, i, {Step::Level});
        return checked(std::move(s), i + 1, n);
    }
    // Level step, necessarily of height >= 1 in a Riordan path. Raise it to an
    // up step and close with a doubled down step at the first down step that
    // crosses below its level. (The first down step after p_i regardless of
    // level would not be injective.)
    internal_check(k >= 1, "psi: 2-labelled level step at height 0");
    int j = -1;
    for (int q = i + 1; q < element.path.size(); ++q) {
        if (r[static_cast<std::size_t>(q)] == Step::Down && h[static_cast<std::size_t>(q) + 1] == k - 1) {
            j = q;
            break;
        }
    }
    internal_check(j >= 0, "psi: no down step crossing below the labelled level step");
    std::vector<Step> s(r);
    s[static_cast<std::size_t>(i)] = Step::Up;
    s.insert(s.begin() + j, Step::Down);
    return checked(std::move(s), j + 1, n);
}

namespace {

PsiDomainElement checked_element(PsiDomainElement e, int n, int expect_len) {
    try {
        e.check(n);
    } catch (const PreconditionError& err) {
        throw InternalError(std::string("psi_inverse: reconstructed element is malformed: ") + err.what());
    }
    internal_check(e.path.size() == expect_len, "psi_inverse: reconstructed path has wrong length");
    return e;
}

}  // namespace

PsiDomainElement psi_inverse(const StarredPath& starred, int n) {
    starred.check(n);
    require(n >= 2, "psi_inverse: defined for n >= 2 only");
    const std::vector<Step>& p = starred.path.steps();
    std::vector<int> h = starred.path.heights();

    if (starred.star) {
        int sigma = *starred.star;
        Step at = p[static_cast<std::size_t>(sigma)];
        if (at == Step::Up) {
            internal_check(sigma + 1 < n, "psi_inverse: starred up step cannot be last");
            Step nxt = p[static_cast<std::size_t>(sigma) + 1];
            if (nxt == Step::Up) {
                // U*U from the a-label wedge: drop the inserted up step and the
                // first down step returning to the star's end level.
                int k = h[static_cast<std::size_t>(sigma)] + 1;
                int dd = -1;
                for (int q = sigma + 2; q < n; ++q) {
                    if (h[static_cast<std::size_t>(q) + 1] == k) {
                        dd = q;
                        break;
                    }
                }
                internal_check(dd >= 0 && p[static_cast<std::size_t>(dd)] == Step::Down,
                               "psi_inverse: U*U without a matching inserted down step");
                std::vector<Step> r = erase_at(erase_at(p, dd), sigma + 1);
                return checked_element(PsiDomainElement::abc('a', dd - 1, LatticePath(std::move(r))), n, n - 2);
            }
            if (nxt == Step::Down) {
                if (sigma == 0)
                    return checked_element(
                        PsiDomainElement::unlabelled_copy(2, LatticePath(std::vector<Step>(p.begin() + 2, p.end()))),
                        n, n - 2);
                std::vector<Step> r = erase_at(erase_at(p, sigma + 1), sigma);
                return checked_element(PsiDomainElement::abc('b', sigma - 1, LatticePath(std::move(r))), n, n - 2);
            }
            // U*H
            std::vector<Step> r = erase_at(p, sigma + 1);
            return checked_element(PsiDomainElement::num('2', sigma, LatticePath(std::move(r))), n, n - 1);
        }
        if (at == Step::Down) {
            internal_check(sigma >= 1, "psi_inverse: starred down step cannot be first");
            Step prv = p[static_cast<std::size_t>(sigma) - 1];
            if (prv == Step::Up) {
                if (sigma == 1)
                    return checked_element(
                        PsiDomainElement::unlabelled_copy(3, LatticePath(std::vector<Step>(p.begin() + 2, p.end()))),
                        n, n - 2);
                std::vector<Step> r = erase_at(erase_at(p, sigma), sigma - 1);
                return checked_element(PsiDomainElement::abc('c', sigma - 2, LatticePath(std::move(r))), n, n - 2);
            }
            if (prv == Step::Level) {
                // HD*
                std::vector<Step> r = erase_at(p, sigma - 1);
                return checked_element(PsiDomainElement::num('2', sigma - 1, LatticePath(std::move(r))), n, n - 1);
            }
            // DD*: remove the doubled down step and lower the last up step that
            // starts at the star's level back to a level step.
            int k = h[static_cast<std::size_t>(sigma)];
            int i = -1;
            for (int q = sigma - 2; q >= 0; --q) {
                if (h[static_cast<std::size_t>(q)] == k) {
                    i = q;
                    break;
                }
            }
            internal_check(i >= 0 && p[static_cast<std::size_t>(i)] == Step::Up,
                           "psi_inverse: DD* without the raised level step");
            std::vector<Step> r = erase_at(p, sigma - 1);
            r[static_cast<std::size_t>(i)] = Step::Level;
            return checked_element(PsiDomainElement::num('2', i, LatticePath(std::move(r))), n, n - 1);
        }
        // H*
        internal_check(at == Step::Level && sigma >= 1, "psi_inverse: starred level step at index 0");
        std::vector<Step> r = erase_at(p, sigma);
        return checked_element(PsiDomainElement::num('1', sigma - 1, LatticePath(std::move(r))), n, n - 1);
    }

    // Unstarred images.
    if (n >= 2 && p[0] == Step::Up && p[1] == Step::Down)
        return checked_element(
            PsiDomainElement::unlabelled_copy(1, LatticePath(std::vector<Step>(p.begin() + 2, p.end()))), n, n - 2);

    // First return to the axis.
    int rho = -1;
    for (int q = 0; q < n; ++q) {
        if (h[static_cast<std::size_t>(q) + 1] == 0) {
            rho = q;
            break;
        }
    }
    internal_check(rho >= 1 && p[static_cast<std::size_t>(rho)] == Step::Down,
                   "psi_inverse: unstarred path has no down-step first return");
    int level1 = -1;
    for (int q = 1; q < rho; ++q) {
        if (p[static_cast<std::size_t>(q)] == Step::Level && h[static_cast<std::size_t>(q)] == 1) {
            level1 = q;
            break;
        }
    }
    if (level1 >= 0) {
        // The level step at height 1 is the flattened up step of the 1-label
        // case; raise it back and drop the leading up step.
        std::vector<Step> r(p.begin() + 1, p.end());
        r[static_cast<std::size_t>(level1 - 1)] = Step::Up;
        return checked_element(PsiDomainElement::num('1', rho - 1, LatticePath(std::move(r))), n, n - 1);
    }
    // a-label on an axis up step: drop the leading up step and the first-return
    // down step; the label sits on the last axis up step before the removal point.
    std::vector<Step> r(p.begin() + 1, p.end());
    r.erase(r.begin() + (rho - 1));
    LatticePath rp(std::move(r));
    std::vector<int> hr = rp.heights();
    int i = -1;
    for (int q = rho - 2; q >= 0; --q) {
        if (rp.at(q) == Step::Up && hr[static_cast<std::size_t>(q)] == 0) {
            i = q;
            break;
        }
    }
    internal_check(i >= 0, "psi_inverse: no axis up step before the first return");
    return checked_element(PsiDomainElement::abc('a', i, std::move(rp)), n, n - 2);
}

std::vector<PsiDomainElement> psi_domain(int n) {
    require(n >= 2, "psi_domain: defined for n >= 2 only");
    std::vector<PsiDomainElement> out;
    for (const LatticePath& r : enumerate_paths(PathClass::Riordan, n - 2)) {
        for (int c = 1; c <= 3; ++c) out.push_back(PsiDomainElement::unlabelled_copy(c, r));
        for (int i = 0; i < r.size(); ++i)
            for (char lab : {'a', 'b', 'c'}) out.push_back(PsiDomainElement::abc(lab, i, r));
    }
    for (const LatticePath& r : enumerate_paths(PathClass::Riordan, n - 1))
        for (int i = 0; i < r.size(); ++i)
            for (char lab : {'1', '2'}) out.push_back(PsiDomainElement::num(lab, i, r));
    return out;
}

std::vector<StarredPath> psi_codomain(int n) {
    require(n >= 2, "psi_codomain: defined for n >= 2 only");
    std::vector<StarredPath> out;
    for (const LatticePath& r : enumerate_paths(PathClass::Riordan, n)) {
        out.push_back(StarredPath{r, std::nullopt});
        for (int i = 0; i < r.size(); ++i) out.push_back(StarredPath{r, i});
    }
    return out;
}

}  // namespace riordan
