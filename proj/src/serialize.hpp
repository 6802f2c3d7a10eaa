#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "paths.hpp"
#include "permutations.hpp"
#include "psi.hpp"
#include "trees.hpp"

namespace riordan {

using Json = nlohmann::json;

// JSON interchange forms. These are the normative machine representations;
// the plain text forms are the human views of the same data.

Json path_to_json(const LatticePath& p, std::optional<PathClass> cls = std::nullopt);
LatticePath path_from_json(const Json& j);

Json tree_to_json(const std::string& paren);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json decomposition_to_json(const CanonicalDecomposition& d);

Json starred_to_json(const StarredPath& s);
StarredPath starred_from_json(const Json& j);

Json psi_element_to_json(const PsiDomainElement& e);
PsiDomainElement psi_element_from_json(const Json& j);

// Statistics record for a Motzkin path: length, area, up-step height sum,
// axis level labels, strip parameters, the phi image with its fixed points
// and inversion number, and the area-minus-heights identity check.
Json path_stats(const LatticePath& p);

// Parses `text` as JSON when it starts with '{' or '[', otherwise as the
// plain text form of the expected object.
bool looks_like_json(std::string_view text);

}  // namespace riordan
