#include "paths.hpp"

#include <algorithm>

namespace riordan {

char step_char(Step s) {
    switch (s) {
        case Step::Up: return 'U';
        case Step::Level: return 'H';
        case Step::Wavy: return 'W';
        case Step::Down: return 'D';
    }
    throw InternalError("step_char: bad step");
}

int step_delta(Step s) {
    switch (s) {
        case Step::Up: return 1;
        case Step::Down: return -1;
        default: return 0;
    }
}

std::string_view path_class_name(PathClass c) {
    switch (c) {
        case PathClass::Dyck: return "dyck";
        case PathClass::Motzkin: return "motzkin";
        case PathClass::TwoMotzkin: return "2motzkin";
        case PathClass::TwoMotzkinNoStraightOnAxis: return "2motzkin-nostraight";
        case PathClass::Riordan: return "riordan";
    }
    throw InternalError("path_class_name: bad class");
}

std::optional<PathClass> path_class_from_name(std::string_view name) {
    if (name == "dyck") return PathClass::Dyck;
    if (name == "motzkin") return PathClass::Motzkin;
    if (name == "2motzkin") return PathClass::TwoMotzkin;
    if (name == "2motzkin-nostraight") return PathClass::TwoMotzkinNoStraightOnAxis;
    if (name == "riordan") return PathClass::Riordan;
    return std::nullopt;
}

LatticePath LatticePath::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(Step::Up); break;
            case 'D': steps.push_back(Step::Down); break;
            case 'H': steps.push_back(Step::Level); break;
            case 'W': steps.push_back(Step::Wavy); break;
            default:
                throw ParseError("path parse: unknown step character '" +
                                     std::string(1, text[i]) + "' at index " + std::to_string(i),
                                 i);
        }
    }
    return LatticePath(std::move(steps));
}

std::string LatticePath::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(step_char(s));
    return out;
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> h(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + step_delta(steps_[i]);
    return h;
}

bool validate(const LatticePath& path, PathClass cls) {
    int h = 0;
    for (Step s : path.steps()) {
        switch (s) {
            case Step::Up: break;
            case Step::Down:
                if (h == 0) return false;
                break;
            case Step::Level:
                if (cls == PathClass::Dyck) return false;
                if (h == 0 && (cls == PathClass::Riordan ||
                               cls == PathClass::TwoMotzkinNoStraightOnAxis))
                    return false;
                break;
            case Step::Wavy:
                if (cls != PathClass::TwoMotzkin &&
                    cls != PathClass::TwoMotzkinNoStraightOnAxis)
                    return false;
                break;
        }
        h += step_delta(s);
    }
    return h == 0;
}

void require_class(const LatticePath& path, PathClass cls, const char* who) {
    if (!validate(path, cls))
        throw PreconditionError(std::string(who) + ": '" + path.str() + "' is not a valid " +
                                std::string(path_class_name(cls)) + " path");
}

PathEnumerator::PathEnumerator(PathClass cls, int n) : cls_(cls), n_(n) {
    require(n >= 0, "enumerate_paths: length must be nonnegative");
    cur_.resize(static_cast<std::size_t>(n));
    height_.resize(static_cast<std::size_t>(n) + 1, 0);
}

bool PathEnumerator::step_allowed(Step s, int height) const {
    switch (s) {
        case Step::Up: return true;
        case Step::Down: return height >= 1;
        case Step::Level:
            if (cls_ == PathClass::Dyck) return false;
            return !(height == 0 && (cls_ == PathClass::Riordan ||
                                     cls_ == PathClass::TwoMotzkinNoStraightOnAxis));
        case Step::Wavy:
            return cls_ == PathClass::TwoMotzkin ||
                   cls_ == PathClass::TwoMotzkinNoStraightOnAxis;
    }
    return false;
}

// Whether some suffix of `remaining` steps returns from `height` to 0.
bool PathEnumerator::completable(int height, int remaining) const {
    if (height > remaining) return false;
    if (cls_ == PathClass::Dyck) return (remaining - height) % 2 == 0;
    if (cls_ == PathClass::Riordan) return !(height == 0 && remaining == 1);
    return true;
}

// Greedily fill positions pos..n-1 with the smallest completable steps.
bool PathEnumerator::extend_from(int pos) {
    for (int i = pos; i < n_; ++i) {
        bool placed = false;
        for (int k = 0; k < 4 && !placed; ++k) {
            Step s = static_cast<Step>(k);
            int nh = height_[i] + step_delta(s);
            if (nh < 0 || !step_allowed(s, height_[i])) continue;
            if (!completable(nh, n_ - i - 1)) continue;
            cur_[static_cast<std::size_t>(i)] = s;
            height_[static_cast<std::size_t>(i) + 1] = nh;
            placed = true;
        }
        if (!placed) return false;
    }
    return true;
}

std::optional<LatticePath> PathEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!completable(0, n_) || !extend_from(0)) {
            done_ = true;
            return std::nullopt;
        }
        return LatticePath(cur_);
    }
    for (int pos = n_ - 1; pos >= 0; --pos) {
        for (int k = static_cast<int>(cur_[static_cast<std::size_t>(pos)]) + 1; k < 4; ++k) {
            Step s = static_cast<Step>(k);
            int nh = height_[pos] + step_delta(s);
            if (nh < 0 || !step_allowed(s, height_[pos])) continue;
            if (!completable(nh, n_ - pos - 1)) continue;
            cur_[static_cast<std::size_t>(pos)] = s;
            height_[static_cast<std::size_t>(pos) + 1] = nh;
            internal_check(extend_from(pos + 1), "path enumerator: completable prefix had no completion");
            return LatticePath(cur_);
        }
    }
    done_ = true;
    return std::nullopt;
}

std::vector<LatticePath> enumerate_paths(PathClass cls, int n) {
    std::vector<LatticePath> out;
    PathEnumerator e(cls, n);
    while (auto p = e.next()) out.push_back(std::move(*p));
    return out;
}

long long area(const LatticePath& path) {
    require_class(path, PathClass::Motzkin, "area");
    long long twice = 0;
    int h = 0;
    for (Step s : path.steps()) {
        int nh = h + step_delta(s);
        twice += h + nh;
        h = nh;
    }
    internal_check(twice % 2 == 0, "area: half-unit contributions did not cancel");
    return twice / 2;
}

long long up_height_sum(const LatticePath& path) {
    long long sum = 0;
    int h = 0;
    for (Step s : path.steps()) {
        if (s == Step::Up) sum += h;
        h += step_delta(s);
    }
    return sum;
}

std::vector<int> axis_level_labels(const LatticePath& path) {
    require_class(path, PathClass::Motzkin, "axis_level_labels");
    std::vector<int> out;
    int h = 0;
    for (int i = 0; i < path.size(); ++i) {
        if (path.at(i) == Step::Level && h == 0) out.push_back(i);
        h += step_delta(path.at(i));
    }
    return out;
}

int xy_cell_label(const LatticePath& path, int step_index) {
    require(step_index >= 0 && step_index < path.size(), "xy_cell_label: step index out of range");
    require(path.at(step_index) != Step::Up, "xy_cell_label: up steps have no labelled cell");
    int y = 0;
    for (int i = 0; i < step_index; ++i) y += step_delta(path.at(i));
    return step_index + y - 1;
}

}  // namespace riordan
