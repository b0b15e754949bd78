#ifndef UMLP_RELATION_HPP
#define UMLP_RELATION_HPP

#include <set>
#include <string>
#include <utility>

namespace umlp {

struct NameRelation {
    std::set<std::pair<std::string, std::string>> pairs;

    auto operator<=>(const NameRelation&) const = default;
};

/// Smallest transitive superset.
NameRelation transitive_closure(const NameRelation& r);

}  // namespace umlp

#endif
