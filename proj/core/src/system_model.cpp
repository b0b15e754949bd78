#include "umlp/system_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace umlp {

std::string value_to_string(const Value& v) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                os << (x ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::string>) {
                os << '"' << x << '"';
            } else {
                os << x;
            }
        },
        v);
    return os.str();
}

std::optional<int> compare_values(const Value& a, const Value& b) {
    auto numeric = [](const Value& v) -> std::optional<double> {
        if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
        if (const auto* d = std::get_if<double>(&v)) return *d;
        return std::nullopt;
    };
    if (auto na = numeric(a)) {
        if (auto nb = numeric(b)) {
            if (*na < *nb) return -1;
            if (*na > *nb) return 1;
            return 0;
        }
        return std::nullopt;
    }
    if (a.index() != b.index()) return std::nullopt;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

bool ControlStore::objectInactive(const Oid& oid) const {
    for (const auto& [key, depth] : frames) {
        if (key.first == oid && depth > 0) return false;
    }
    return true;
}

const SystemState* SystemModel::findState(const std::string& id) const {
    for (const auto& s : states)
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<const SystemState*> SystemModel::reachableStates() const {
    std::vector<const SystemState*> out;
    for (const auto& s : states)
        if (reachable.count(s.id)) out.push_back(&s);
    return out;
}

std::set<std::pair<std::string, TypeName>> SystemModel::allAttrsOf(
    const ClassName& c) const {
    std::set<std::pair<std::string, TypeName>> out;
    // Walk the superclass chain; sub is acyclic by the load invariant.
    std::set<ClassName> visited;
    std::vector<ClassName> work{c};
    while (!work.empty()) {
        ClassName cur = work.back();
        work.pop_back();
        if (!visited.insert(cur).second) continue;
        if (auto it = attrsOf.find(cur); it != attrsOf.end())
            out.insert(it->second.begin(), it->second.end());
        for (const auto& [sub_, super] : sub)
            if (sub_ == cur) work.push_back(super);
    }
    return out;
}

Result<std::set<std::pair<ClassName, ClassName>>> sub_star(const SystemModel& sys) {
    std::set<std::pair<ClassName, ClassName>> closure = sys.sub;
    for (const auto& c : sys.uclasses) closure.insert({c, c});
    // Fixed-point join.
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::pair<ClassName, ClassName>> add;
        for (const auto& [a, b] : closure)
            for (const auto& [c, d] : closure)
                if (b == c && !closure.count({a, d})) add.insert({a, d});
        if (!add.empty()) {
            closure.insert(add.begin(), add.end());
            changed = true;
        }
    }
    for (const auto& [a, b] : closure) {
        if (a != b && closure.count({b, a})) {
            return Result<std::set<std::pair<ClassName, ClassName>>>::failure(
                Diagnostic{"CycleError", Severity::Error,
                           "subclass relation has a cycle through '" + a + "' and '" +
                               b + "'",
                           "sub"});
        }
    }
    return Result<std::set<std::pair<ClassName, ClassName>>>::success(std::move(closure));
}

const std::vector<Link>& rel_of(const SystemModel& sys, const AssocId& a,
                                const DataStore& ds) {
    if (!sys.uassocs.count(a))
        throw std::out_of_range("unknown association '" + a + "'");
    static const std::vector<Link> kEmpty;
    auto it = ds.links.find(a);
    return it == ds.links.end() ? kEmpty : it->second;
}

std::vector<std::pair<Oid, Oid>> link_pairs(const Link& link) {
    std::vector<std::pair<Oid, Oid>> out;
    if (link.toList) {
        for (const auto& t : *link.toList) out.emplace_back(link.from, t);
    } else if (link.to) {
        out.emplace_back(link.from, *link.to);
    }
    return out;
}

SystemState inactive_view(const SystemState& s) {
    SystemState out = s;
    std::set<Oid> inactive;
    for (const auto& oid : s.ds.liveOids)
        if (s.cs.objectInactive(oid)) inactive.insert(oid);
    out.ds.liveOids = inactive;

    for (auto it = out.ds.attrVal.begin(); it != out.ds.attrVal.end();) {
        if (!inactive.count(it->first.first)) {
            it = out.ds.attrVal.erase(it);
        } else {
            ++it;
        }
    }
    for (auto& [assoc, links] : out.ds.links) {
        std::vector<Link> kept;
        for (const auto& l : links) {
            bool allInactive = inactive.count(l.from) > 0;
            if (l.to && !inactive.count(*l.to)) allInactive = false;
            if (l.toList) {
                for (const auto& t : *l.toList)
                    if (!inactive.count(t)) allInactive = false;
            }
            if (allInactive) kept.push_back(l);
        }
        links = std::move(kept);
    }
    return out;
}

}  // namespace umlp
