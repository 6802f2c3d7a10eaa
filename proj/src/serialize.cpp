#include "serialize.hpp"

#include "bijections.hpp"

namespace riordan {

namespace {

std::string require_string_field(const Json& j, const char* field, const char* what) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_string())
        throw ParseError(std::string(what) + ": expected object with string field '" + field + "'", 0);
    return j[field].get<std::string>();
}

}  // namespace

Json path_to_json(const LatticePath& p, std::optional<PathClass> cls) {
    Json j{{"steps", p.str()}};
    if (cls) j["class"] = std::string(path_class_name(*cls));
    return j;
}

LatticePath path_from_json(const Json& j) {
    return LatticePath::parse(require_string_field(j, "steps", "path from json"));
}

Json tree_to_json(const std::string& paren) { return Json{{"tree", paren}}; }

Json permutation_to_json(const Permutation& p) {
    Json j = Json::array();
    for (int v : p.word()) j.push_back(v);
    return j;
}

Permutation permutation_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("permutation from json: expected an array of integers", 0);
    std::vector<int> word;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw ParseError("permutation from json: expected integers", word.size());
        word.push_back(v.get<int>());
    }
    return Permutation::from_word(std::move(word));
}

Json decomposition_to_json(const CanonicalDecomposition& d) {
    Json j = Json::array();
    for (const auto& [h, t] : d.pairs) j.push_back(Json::array({h, t}));
    return j;
}

Json starred_to_json(const StarredPath& s) {
    Json j{{"steps", s.path.str()}};
    j["star"] = s.star ? Json(*s.star) : Json(nullptr);
    return j;
}

StarredPath starred_from_json(const Json& j) {
    StarredPath out;
    out.path = LatticePath::parse(require_string_field(j, "steps", "starred path from json"));
    if (j.contains("star") && !j["star"].is_null()) {
        if (!j["star"].is_number_integer())
            throw ParseError("starred path from json: 'star' must be an integer or null", 0);
        out.star = j["star"].get<int>();
    }
    return out;
}

Json psi_element_to_json(const PsiDomainElement& e) {
    switch (e.kind) {
        case PsiDomainElement::Kind::Copy:
            return Json{{"kind", "copy"}, {"copy", e.copy}, {"steps", e.path.str()}};
        case PsiDomainElement::Kind::Abc:
            return Json{{"kind", "abc"},
                        {"label", std::string(1, e.label)},
                        {"index", e.index},
                        {"steps", e.path.str()}};
        case PsiDomainElement::Kind::Num:
            return Json{{"kind", "num"},
                        {"label", std::string(1, e.label)},
                        {"index", e.index},
                        {"steps", e.path.str()}};
    }
    throw InternalError("psi_element_to_json: bad kind");
}

PsiDomainElement psi_element_from_json(const Json& j) {
    std::string kind = require_string_field(j, "kind", "psi element from json");
    LatticePath path = LatticePath::parse(require_string_field(j, "steps", "psi element from json"));
    if (kind == "copy") {
        if (!j.contains("copy") || !j["copy"].is_number_integer())
            throw ParseError("psi element from json: copy kind needs integer field 'copy'", 0);
        return PsiDomainElement::unlabelled_copy(j["copy"].get<int>(), std::move(path));
    }
    std::string label = require_string_field(j, "label", "psi element from json");
    if (label.size() != 1) throw ParseError("psi element from json: label must be one character", 0);
    if (!j.contains("index") || !j["index"].is_number_integer())
        throw ParseError("psi element from json: labelled kinds need integer field 'index'", 0);
    int index = j["index"].get<int>();
    if (kind == "abc") return PsiDomainElement::abc(label[0], index, std::move(path));
    if (kind == "num") return PsiDomainElement::num(label[0], index, std::move(path));
    throw ParseError("psi element from json: kind must be copy, abc or num", 0);
}

Json path_stats(const LatticePath& p) {
    require_class(p, PathClass::Motzkin, "stats");
    CanonicalDecomposition d = strip_decompose(p);
    Permutation image = phi(p);
    long long a = area(p);
    long long ups = up_height_sum(p);
    long long inv = inversion_number(image);
    Json j;
    j["steps"] = p.str();
    j["n"] = p.size();
    j["riordan"] = validate(p, PathClass::Riordan);
    j["area"] = a;
    j["up_height_sum"] = ups;
    j["axis_level_labels"] = axis_level_labels(p);
    j["strip_parameters"] = decomposition_to_json(d);
    j["phi"] = permutation_to_json(image);
    j["fixed_points"] = fixed_points(image);
    j["inversion_number"] = inv;
    j["identity_ok"] = (a - ups == inv);
    return j;
}

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' || c == '[';
    }
    return false;
}

}  // namespace riordan
