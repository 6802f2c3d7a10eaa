#include "riordan/riordan.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "bijections.hpp"
#include "errors.hpp"
#include "paths.hpp"
#include "permutations.hpp"
#include "psi.hpp"
#include "sequences.hpp"
#include "serialize.hpp"
#include "trees.hpp"
#include "verify.hpp"

using namespace riordan;

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rp_status set_error(rp_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
rp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return set_error(RP_ERROR_PARSE, e.what());
    } catch (const PreconditionError& e) {
        return set_error(RP_ERROR_PRECONDITION, e.what());
    } catch (const InternalError& e) {
        return set_error(RP_ERROR_INTERNAL, e.what());
    } catch (const nlohmann::json::exception& e) {
        return set_error(RP_ERROR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(RP_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(RP_ERROR_INTERNAL, e.what());
    }
}

rp_status not_null(const void* p, const char* what) {
    if (p) return RP_OK;
    return set_error(RP_ERROR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

rp_status emit(char** out, const std::string& value) {
    *out = dup_string(value);
    if (!*out) return set_error(RP_ERROR_INTERNAL, "out of memory");
    return RP_OK;
}

long long count_by_enumeration(PathClass cls, int n) {
    PathEnumerator e(cls, n);
    long long c = 0;
    while (e.next()) ++c;
    return c;
}

}  // namespace

struct rp_enumerator {
    // Paths stream lazily; bushes and avoiders are materialized up front.
    std::variant<PathEnumerator, std::vector<std::string>> source;
    std::size_t cursor = 0;
    uint64_t yielded = 0;

    explicit rp_enumerator(PathEnumerator e) : source(std::move(e)) {}
    explicit rp_enumerator(std::vector<std::string> items) : source(std::move(items)) {}
};

struct rp_path {
    LatticePath path;
};

struct rp_report {
    VerificationReport report;
};

extern "C" {

const char* rp_status_name(rp_status status) {
    switch (status) {
        case RP_OK: return "ok";
        case RP_ERROR_INVALID_ARGUMENT: return "invalid-argument";
        case RP_ERROR_PARSE: return "parse-error";
        case RP_ERROR_PRECONDITION: return "precondition-violation";
        case RP_ERROR_RANGE: return "out-of-range";
        case RP_ERROR_INTERNAL: return "internal-error";
        case RP_ERROR_END: return "end";
    }
    return "unknown";
}

const char* rp_last_error(void) { return g_last_error.c_str(); }

void rp_string_free(char* s) { std::free(s); }

const char* rp_version(void) { return "1.0.0"; }

rp_status rp_count(const char* sequence, int n, const char* method, char** out_decimal) {
    if (rp_status s = not_null(sequence, "sequence"); s != RP_OK) return s;
    if (rp_status s = not_null(out_decimal, "out_decimal"); s != RP_OK) return s;
    return guarded([&]() -> rp_status {
        if (n < 0) return set_error(RP_ERROR_RANGE, "count: n must be nonnegative");
        std::string seq = sequence;
        std::string m = method ? method : "";
        Count value;
        if (seq == "riordan") {
            if (m.empty() || m == "closed") value = riordan_closed(n);
            else if (m == "recurrence") value = riordan_recurrence(n);
            else if (m == "from-catalan") value = riordan_from_catalan(n);
            else if (m == "enumerate") value = to_count(count_by_enumeration(PathClass::Riordan, n));
            else return set_error(RP_ERROR_INVALID_ARGUMENT, "count: unknown method '" + m + "' for riordan");
        } else if (seq == "catalan") {
            if (m.empty() || m == "closed") value = catalan(n);
            else if (m == "from-riordan") value = catalan_from_riordan(n);
            else if (m == "enumerate") value = to_count(count_by_enumeration(PathClass::Dyck, 2 * n));
            else return set_error(RP_ERROR_INVALID_ARGUMENT, "count: unknown method '" + m + "' for catalan");
        } else if (seq == "motzkin") {
            if (m.empty() || m == "recurrence") value = motzkin(n);
            else if (m == "enumerate") value = to_count(count_by_enumeration(PathClass::Motzkin, n));
            else return set_error(RP_ERROR_INVALID_ARGUMENT, "count: unknown method '" + m + "' for motzkin");
        } else {
            return set_error(RP_ERROR_INVALID_ARGUMENT, "count: unknown sequence '" + seq + "'");
        }
        return emit(out_decimal, value.get_str());
    });
}

rp_status rp_labelled_forest_count(int n, int k, char** out_decimal) {
    if (rp_status s = not_null(out_decimal, "out_decimal"); s != RP_OK) return s;
    return guarded([&]() -> rp_status { return emit(out_decimal, labelled_forest_count(n, k).get_str()); });
}

rp_status rp_bush_count_by_internal(int n, int k, char** out_decimal) {
    if (rp_status s = not_null(out_decimal, "out_decimal"); s != RP_OK) return s;
    return guarded([&]() -> rp_status { return emit(out_decimal, bush_count_by_internal(n, k).get_str()); });
}

rp_status rp_enumerator_new(const char* family, int n, rp_enumerator** out) {
    if (rp_status s = not_null(family, "family"); s != RP_OK) return s;
    if (rp_status s = not_null(out, "out"); s != RP_OK) return s;
    *out = nullptr;
    return guarded([&]() -> rp_status {
        if (n < 0) return set_error(RP_ERROR_RANGE, "enumerate: n must be nonnegative");
        std::string fam = family;
        if (auto cls = path_class_from_name(fam)) {
            *out = new rp_enumerator(PathEnumerator(*cls, n));
            return RP_OK;
        }
        if (fam == "bush") {
            *out = new rp_enumerator(enumerate_short_bushes(n));
            return RP_OK;
        }
        if (fam == "avoider" || fam == "avoiding-derangement") {
            std::vector<std::string> items;
            for (const Permutation& p : enumerate_avoiders(n, fam == "avoiding-derangement"))
                items.push_back(p.str());
            *out = new rp_enumerator(std::move(items));
            return RP_OK;
        }
        return set_error(RP_ERROR_INVALID_ARGUMENT, "enumerate: unknown family '" + fam + "'");
    });
}

rp_status rp_enumerator_next(rp_enumerator* e, char** out_item) {
    if (rp_status s = not_null(e, "enumerator"); s != RP_OK) return s;
    if (rp_status s = not_null(out_item, "out_item"); s != RP_OK) return s;
    *out_item = nullptr;
    return guarded([&]() -> rp_status {
        std::string item;
        if (auto* paths = std::get_if<PathEnumerator>(&e->source)) {
            auto next = paths->next();
            if (!next) return RP_ERROR_END;
            item = next->str();
        } else {
            auto& items = std::get<std::vector<std::string>>(e->source);
            if (e->cursor >= items.size()) return RP_ERROR_END;
            item = items[e->cursor++];
        }
        ++e->yielded;
        return emit(out_item, item);
    });
}

uint64_t rp_enumerator_yielded(const rp_enumerator* e) { return e ? e->yielded : 0; }

void rp_enumerator_free(rp_enumerator* e) { delete e; }

rp_status rp_path_parse(const char* text, rp_path** out) {
    if (rp_status s = not_null(text, "text"); s != RP_OK) return s;
    if (rp_status s = not_null(out, "out"); s != RP_OK) return s;
    *out = nullptr;
    return guarded([&]() -> rp_status {
        *out = new rp_path{LatticePath::parse(text)};
        return RP_OK;
    });
}

rp_status rp_path_format(const rp_path* p, char** out_text) {
    if (rp_status s = not_null(p, "path"); s != RP_OK) return s;
    if (rp_status s = not_null(out_text, "out_text"); s != RP_OK) return s;
    return guarded([&]() -> rp_status { return emit(out_text, p->path.str()); });
}

int rp_path_is_valid(const rp_path* p, const char* path_class) {
    if (!p || !path_class) return -1;
    auto cls = path_class_from_name(path_class);
    if (!cls) return -1;
    return validate(p->path, *cls) ? 1 : 0;
}

rp_status rp_path_stats_json(const rp_path* p, char** out_json) {
    if (rp_status s = not_null(p, "path"); s != RP_OK) return s;
    if (rp_status s = not_null(out_json, "out_json"); s != RP_OK) return s;
    return guarded([&]() -> rp_status { return emit(out_json, path_stats(p->path).dump()); });
}

void rp_path_free(rp_path* p) { delete p; }

}  // extern "C"

namespace {

// A mapped object, convertible to both text and JSON output forms.
struct Mapped {
    std::string text;
    Json json;
};

LatticePath input_path(const std::string& input) {
    if (looks_like_json(input)) return path_from_json(Json::parse(input));
    return LatticePath::parse(input);
}

Permutation input_permutation(const std::string& input) {
    if (looks_like_json(input)) return permutation_from_json(Json::parse(input));
    return Permutation::parse(input);
}

StarredPath input_starred(const std::string& input) {
    if (looks_like_json(input)) return starred_from_json(Json::parse(input));
    return StarredPath::parse(input);
}

PsiDomainElement input_psi_element(const std::string& input) {
    if (looks_like_json(input)) return psi_element_from_json(Json::parse(input));
    return PsiDomainElement::parse(input);
}

int psi_parameter(int n, int inferred, const char* who) {
    if (n < 0) return inferred;
    require(n == inferred, std::string(who) + ": n does not match the input object");
    return n;
}

// Canonical text of the input object, for round-trip comparison.
std::string canonical_input(const std::string& name, const std::string& input) {
    if (name == "phi-inv") return input_permutation(input).str();
    if (name == "psi") return input_psi_element(input).str();
    if (name == "psi-inv") return input_starred(input).str();
    if (name == "bush2path") {
        if (!looks_like_json(input)) return PlaneTree::parse(input).str();
        Json j = Json::parse(input);
        return PlaneTree::parse(j.at("tree").get<std::string>()).str();
    }
    return input_path(input).str();  // phi, path2bush, dyck-encode, dyck-decode
}

Mapped apply_bijection(const std::string& name, const std::string& input, int n) {
    if (name == "phi") {
        Permutation image = phi(input_path(input));
        return {image.str(), permutation_to_json(image)};
    }
    if (name == "phi-inv") {
        LatticePath path = phi_inverse(input_permutation(input));
        return {path.str(), path_to_json(path, PathClass::Motzkin)};
    }
    if (name == "psi") {
        PsiDomainElement e = input_psi_element(input);
        int param = psi_parameter(n, e.path.size() + (e.kind == PsiDomainElement::Kind::Num ? 1 : 2), "psi");
        StarredPath s = psi(e, param);
        return {s.str(), starred_to_json(s)};
    }
    if (name == "psi-inv") {
        StarredPath s = input_starred(input);
        int param = psi_parameter(n, s.path.size(), "psi-inv");
        PsiDomainElement e = psi_inverse(s, param);
        return {e.str(), psi_element_to_json(e)};
    }
    if (name == "bush2path") {
        std::string paren = input;
        if (looks_like_json(input)) {
            Json j = Json::parse(input);
            if (!j.is_object() || !j.contains("tree") || !j["tree"].is_string())
                throw ParseError("bush2path: expected {\"tree\": \"...\"}", 0);
            paren = j["tree"].get<std::string>();
        }
        LatticePath path = bush_to_riordan(PlaneTree::parse(paren));
        return {path.str(), path_to_json(path, PathClass::Riordan)};
    }
    if (name == "path2bush") {
        PlaneTree bush = riordan_to_bush(input_path(input));
        return {bush.str(), tree_to_json(bush.str())};
    }
    if (name == "dyck-encode") {
        LatticePath image = dyck_pair_encode(input_path(input));
        return {image.str(), path_to_json(image, PathClass::TwoMotzkinNoStraightOnAxis)};
    }
    if (name == "dyck-decode") {
        LatticePath image = dyck_pair_decode(input_path(input));
        return {image.str(), path_to_json(image, PathClass::Dyck)};
    }
    throw std::invalid_argument("map: unknown bijection '" + name + "'");
}

}  // namespace

extern "C" {

rp_status rp_map(const char* bijection, const char* input, int n, char** out_text) {
    if (rp_status s = not_null(bijection, "bijection"); s != RP_OK) return s;
    if (rp_status s = not_null(input, "input"); s != RP_OK) return s;
    if (rp_status s = not_null(out_text, "out_text"); s != RP_OK) return s;
    return guarded([&]() -> rp_status { return emit(out_text, apply_bijection(bijection, input, n).text); });
}

rp_status rp_map_json(const char* bijection, const char* input, int n, char** out_json) {
    if (rp_status s = not_null(bijection, "bijection"); s != RP_OK) return s;
    if (rp_status s = not_null(input, "input"); s != RP_OK) return s;
    if (rp_status s = not_null(out_json, "out_json"); s != RP_OK) return s;
    return guarded(
        [&]() -> rp_status { return emit(out_json, apply_bijection(bijection, input, n).json.dump()); });
}

rp_status rp_map_check(const char* bijection, const char* input, int n) {
    if (rp_status s = not_null(bijection, "bijection"); s != RP_OK) return s;
    if (rp_status s = not_null(input, "input"); s != RP_OK) return s;
    return guarded([&]() -> rp_status {
        static const std::pair<const char*, const char*> inverses[] = {
            {"phi", "phi-inv"},         {"phi-inv", "phi"},
            {"psi", "psi-inv"},         {"psi-inv", "psi"},
            {"bush2path", "path2bush"}, {"path2bush", "bush2path"},
            {"dyck-encode", "dyck-decode"}, {"dyck-decode", "dyck-encode"},
        };
        std::string name = bijection;
        const char* inverse = nullptr;
        for (const auto& [fwd, inv] : inverses)
            if (name == fwd) inverse = inv;
        if (!inverse) return set_error(RP_ERROR_INVALID_ARGUMENT, "map: unknown bijection '" + name + "'");
        Mapped image = apply_bijection(name, input, n);
        Mapped back = apply_bijection(inverse, image.text, n);
        internal_check(back.text == canonical_input(name, input),
                       "map check: inverse round trip failed");
        return RP_OK;
    });
}

rp_status rp_verify(const char* suite, int max_n, rp_report** out) {
    if (rp_status s = not_null(suite, "suite"); s != RP_OK) return s;
    if (rp_status s = not_null(out, "out"); s != RP_OK) return s;
    *out = nullptr;
    return guarded([&]() -> rp_status {
        if (max_n < 0) return set_error(RP_ERROR_RANGE, "verify: max_n must be nonnegative");
        *out = new rp_report{run_verification(suite, max_n)};
        return RP_OK;
    });
}

int rp_report_passed(const rp_report* r) { return r && r->report.passed() ? 1 : 0; }

rp_status rp_report_json(const rp_report* r, char** out_json) {
    if (rp_status s = not_null(r, "report"); s != RP_OK) return s;
    if (rp_status s = not_null(out_json, "out_json"); s != RP_OK) return s;
    return guarded([&]() -> rp_status { return emit(out_json, r->report.json()); });
}

double rp_report_duration_ms(const rp_report* r) { return r ? r->report.duration_ms : 0.0; }

size_t rp_report_property_count(const rp_report* r) { return r ? r->report.properties.size() : 0; }

rp_status rp_report_property_line(const rp_report* r, size_t index, char** out_line) {
    if (rp_status s = not_null(r, "report"); s != RP_OK) return s;
    if (rp_status s = not_null(out_line, "out_line"); s != RP_OK) return s;
    return guarded([&]() -> rp_status {
        if (index >= r->report.properties.size())
            return set_error(RP_ERROR_RANGE, "report: property index out of range");
        const PropertyResult& p = r->report.properties[index];
        std::string line = (p.pass ? "PASS " : "FAIL ") + p.name + " [" + p.range + "]";
        if (!p.pass) line += " counterexample: " + p.counterexample;
        return emit(out_line, line);
    });
}

void rp_report_free(rp_report* r) { delete r; }

}  // extern "C"
