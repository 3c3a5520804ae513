#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"

namespace qlink {

struct CatalogEntry {
    std::string name;
    std::string braid_text;
    std::string note;
};

// Built-in closures covering knots, two-component links, a vanishing
// Alexander case, and a presentation-equivalence pair.
const std::vector<CatalogEntry>& catalog_entries();

// Case-insensitive lookup; accepts "t(2,4)" as an alias of "t24".
std::optional<BraidWord> catalog_lookup(const std::string& name);

}  // namespace qlink
