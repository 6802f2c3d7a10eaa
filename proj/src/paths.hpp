#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace riordan {

// Step kinds in the fixed enumeration order U < H < W < D.
enum class Step : unsigned char { Up = 0, Level = 1, Wavy = 2, Down = 3 };

char step_char(Step s);
int step_delta(Step s);

enum class PathClass {
    Dyck,
    Motzkin,
    TwoMotzkin,
    TwoMotzkinNoStraightOnAxis,
    Riordan,
};

std::string_view path_class_name(PathClass c);
std::optional<PathClass> path_class_from_name(std::string_view name);

// A lattice path as an immutable step sequence. Paths carry no class of their
// own; validity against a class is checked separately.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // Text over {U, D, H, W}; rejects anything else with the offender's index.
    static LatticePath parse(std::string_view text);

    std::string str() const;

    int size() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }
    Step at(int i) const { return steps_[static_cast<std::size_t>(i)]; }
    const std::vector<Step>& steps() const { return steps_; }

    // y-coordinates before each step; size() + 1 entries, heights()[0] == 0.
    std::vector<int> heights() const;

    bool operator==(const LatticePath& other) const = default;

private:
    std::vector<Step> steps_;
};

bool validate(const LatticePath& path, PathClass cls);
void require_class(const LatticePath& path, PathClass cls, const char* who);

// Pull-style enumerator yielding all paths of the class with n steps, each
// exactly once, lexicographically under U < H < W < D. Not safe to advance
// one instance concurrently; independent instances are.
class PathEnumerator {
public:
    PathEnumerator(PathClass cls, int n);
    std::optional<LatticePath> next();

private:
    bool step_allowed(Step s, int height) const;
    bool completable(int height, int remaining) const;
    bool extend_from(int pos);

    PathClass cls_;
    int n_;
    std::vector<Step> cur_;
    std::vector<int> height_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<LatticePath> enumerate_paths(PathClass cls, int n);

// Geometric area between a Motzkin path and the x-axis (exact integer; the
// half-unit trapezoid contributions are checked to cancel).
long long area(const LatticePath& path);

// Sum of the starting heights of the up steps.
long long up_height_sum(const LatticePath& path);

// 0-based indices of the Level steps at height 0 of a Motzkin path.
std::vector<int> axis_level_labels(const LatticePath& path);

// (x+y)-label of the cell under the step starting at (x, y): x + y - 1.
// Defined for Down and Level steps only.
int xy_cell_label(const LatticePath& path, int step_index);

}  // namespace riordan
