#include "trees.hpp"

#include <algorithm>
#include <mutex>

namespace riordan {

namespace {

PlaneTree parse_node(std::string_view s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '(')
        throw ParseError("tree parse: expected '(' at index " + std::to_string(pos), pos);
    ++pos;
    PlaneTree node;
    while (pos < s.size() && s[pos] == '(') node.children.push_back(parse_node(s, pos));
    if (pos >= s.size() || s[pos] != ')')
        throw ParseError("tree parse: expected ')' at index " + std::to_string(pos), pos);
    ++pos;
    return node;
}

}  // namespace

PlaneTree PlaneTree::parse(std::string_view paren) {
    std::size_t pos = 0;
    PlaneTree t = parse_node(paren, pos);
    if (pos != paren.size())
        throw ParseError("tree parse: trailing characters at index " + std::to_string(pos), pos);
    return t;
}

std::string PlaneTree::str() const {
    std::string out = "(";
    for (const PlaneTree& c : children) out += c.str();
    out += ")";
    return out;
}

int PlaneTree::edge_count() const {
    int n = 0;
    for (const PlaneTree& c : children) n += 1 + c.edge_count();
    return n;
}

int PlaneTree::internal_vertex_count() const {
    int n = children.empty() ? 0 : 1;
    for (const PlaneTree& c : children) n += c.internal_vertex_count();
    return n;
}

bool PlaneTree::is_short_bush() const {
    if (children.size() == 1) return false;
    return std::all_of(children.begin(), children.end(),
                       [](const PlaneTree& c) { return c.is_short_bush(); });
}

namespace {

// Serializations of all short bushes by edge count, built bottom-up so that
// outdegree-one shapes are never generated in the first place.
class BushTable {
public:
    const std::vector<std::string>& upto(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(table_.size()) <= n) grow();
        return table_[static_cast<std::size_t>(n)];
    }

private:
    void grow() {
        int n = static_cast<int>(table_.size());
        std::vector<std::string> out;
        if (n == 0) {
            out.push_back("()");
        } else if (n >= 2) {
            std::string acc = "(";
            for (int degree = 2; degree <= n; ++degree)
                compose(n - degree, degree, acc, out);
            std::sort(out.begin(), out.end());
        }
        table_.push_back(std::move(out));
    }

    // Append `children_left` subtree serializations using `edges_left` edges
    // beyond the connecting ones.
    void compose(int edges_left, int children_left, std::string& acc,
                 std::vector<std::string>& out) {
        if (children_left == 0) {
            if (edges_left == 0) out.push_back(acc + ")");
            return;
        }
        int lo = 0, hi = edges_left;
        if (children_left == 1) lo = edges_left;
        for (int k = lo; k <= hi; ++k) {
            for (const std::string& sub : table_[static_cast<std::size_t>(k)]) {
                std::size_t mark = acc.size();
                acc += sub;
                compose(edges_left - k, children_left - 1, acc, out);
                acc.resize(mark);
            }
        }
    }

    std::mutex mu_;
    std::vector<std::vector<std::string>> table_;
};

BushTable& bush_table() {
    static BushTable t;
    return t;
}

void walk_edges(const PlaneTree& node, std::vector<Step>& out) {
    std::size_t degree = node.children.size();
    if (degree == 1)
        throw PreconditionError("bush_to_riordan: vertex of outdegree one is not a short bush");
    for (std::size_t j = 0; j < degree; ++j) {
        if (j == 0)
            out.push_back(Step::Up);
        else if (j == degree - 1)
            out.push_back(Step::Down);
        else
            out.push_back(Step::Level);
        walk_edges(node.children[j], out);
    }
}

// Grammar of the edge coding: T ::= empty | U T (H T)* D T.
PlaneTree parse_coded(const LatticePath& p, int& pos) {
    PlaneTree node;
    if (pos < p.size() && p.at(pos) == Step::Up) {
        ++pos;
        node.children.push_back(parse_coded(p, pos));
        while (pos < p.size() && p.at(pos) == Step::Level) {
            ++pos;
            node.children.push_back(parse_coded(p, pos));
        }
        internal_check(pos < p.size() && p.at(pos) == Step::Down,
                       "riordan_to_bush: expected a down step closing a vertex");
        ++pos;
        node.children.push_back(parse_coded(p, pos));
    }
    return node;
}

}  // namespace

std::vector<std::string> enumerate_short_bushes(int n) {
    require(n >= 0, "enumerate_short_bushes: edge count must be nonnegative");
    return bush_table().upto(n);
}

LatticePath bush_to_riordan(const PlaneTree& bush) {
    std::vector<Step> steps;
    walk_edges(bush, steps);
    LatticePath path(std::move(steps));
    internal_check(path.size() == bush.edge_count(), "bush_to_riordan: path length != edge count");
    internal_check(validate(path, PathClass::Riordan), "bush_to_riordan: image is not a Riordan path");
    return path;
}

PlaneTree riordan_to_bush(const LatticePath& path) {
    require_class(path, PathClass::Riordan, "riordan_to_bush");
    int pos = 0;
    PlaneTree t = parse_coded(path, pos);
    internal_check(pos == path.size(), "riordan_to_bush: trailing steps after the root");
    internal_check(bush_to_riordan(t) == path, "riordan_to_bush: round trip mismatch");
    return t;
}

}  // namespace riordan
