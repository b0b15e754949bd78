#include "umlp/relation.hpp"

namespace umlp {

NameRelation transitive_closure(const NameRelation& r) {
    NameRelation out = r;
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::pair<std::string, std::string>> add;
        for (const auto& [a, b] : out.pairs)
            for (const auto& [c, d] : out.pairs)
                if (b == c && !out.pairs.count({a, d})) add.insert({a, d});
        if (!add.empty()) {
            out.pairs.insert(add.begin(), add.end());
            changed = true;
        }
    }
    return out;
}

}  // namespace umlp
