#include "catalog.hpp"

#include <algorithm>
#include <cctype>

namespace qlink {

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"unknot", "1:", "trivial knot"},
        {"hopf", "2: 1 1", "positive Hopf link"},
        {"trefoil", "2: 1 1 1", "right-handed trefoil"},
        {"trefoil-alt", "3: 1 2 1 2", "trefoil on three strands"},
        {"figure-eight", "3: 1 -2 1 -2", "figure-eight knot"},
        {"t24", "2: 1 1 1 1", "(2,4) torus link"},
        {"split-unknots", "2:", "two split unknots"},
    };
    return entries;
}

std::optional<BraidWord> catalog_lookup(const std::string& name) {
    std::string key;
    for (char ch : name) key.push_back(static_cast<char>(std::tolower(ch)));
    if (key == "t(2,4)") key = "t24";
    for (const auto& e : catalog_entries())
        if (e.name == key) return parse_braid(e.braid_text);
    return std::nullopt;
}

}  // namespace qlink
