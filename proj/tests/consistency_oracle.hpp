#ifndef UMLP_TESTS_CONSISTENCY_ORACLE_HPP
#define UMLP_TESTS_CONSISTENCY_ORACLE_HPP

#include <bit>
#include <functional>
#include <map>

#include "umlp/conformance.hpp"
#include "umlp/consistency.hpp"

namespace umlp::test {

// Independent unoptimized enumerator: no symmetry reduction, plain nested
// loops over populations, attribute assignments and link subsets. Only
// handles the restricted shapes used below (concrete/abstract classes,
// basic-typed attributes, plain unqualified associations).
inline bool naive_consistent(const ast::ClassDiagram& cd, const Bounds& b) {
    std::map<TypeName, std::vector<Value>> carriers{
        {"boolean", {false, true}},
        {"int", {std::int64_t{0}, std::int64_t{1}}},
    };
    std::vector<const ast::ClassDef*> concrete;
    SystemModel base;
    for (const auto& c : cd.classes) {
        base.uclasses.insert(c.name);
        for (const auto& a : c.attrs) {
            base.attrsOf[c.name].insert({a.name, a.type.name});
            base.types[a.type.name] = carriers.at(a.type.name);
        }
        if (!c.modifiers.count(ast::Modifier::Abstract)) concrete.push_back(&c);
    }
    for (const auto& a : cd.assocs)
        base.uassocs[assoc_key(a)] =
            AssocInfo{a.leftPart.className, a.rightPart.className};

    // Population vectors.
    std::vector<int> pop(concrete.size(), 0);
    while (true) {
        SystemModel sys = base;
        SystemState s;
        s.id = "s0";
        std::map<ClassName, std::vector<Oid>> oids;
        std::vector<std::pair<Oid, std::pair<std::string, TypeName>>> slots;
        for (std::size_t i = 0; i < concrete.size(); ++i) {
            for (int k = 1; k <= pop[i]; ++k) {
                Oid o = concrete[i]->name + "#" + std::to_string(k);
                sys.uoids[o] = concrete[i]->name;
                s.ds.liveOids.insert(o);
                oids[concrete[i]->name].push_back(o);
                for (const auto& at : concrete[i]->attrs)
                    slots.push_back({o, {at.name, at.type.name}});
            }
        }
        // Attribute assignments: odometer over all slots.
        std::vector<std::size_t> assign(slots.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < slots.size(); ++i)
                s.ds.attrVal[{slots[i].first, slots[i].second.first}] =
                    carriers.at(slots[i].second.second)[assign[i]];
            // Link subsets per association, via bitmasks over the domain.
            std::vector<std::pair<AssocId, std::vector<Link>>> domains;
            for (const auto& [id, info] : sys.uassocs) {
                std::vector<Link> dom;
                for (const auto& l : oids[info.leftClass])
                    for (const auto& r : oids[info.rightClass])
                        dom.push_back(Link{l, r, std::nullopt, std::nullopt});
                domains.push_back({id, dom});
            }
            std::function<bool(std::size_t)> links = [&](std::size_t di) -> bool {
                if (di == domains.size()) {
                    SystemModel candidate = sys;
                    candidate.states = {s};
                    candidate.reachable = {"s0"};
                    return check_conformance({cd}, candidate).aggregatePass;
                }
                const auto& [id, dom] = domains[di];
                for (unsigned mask = 0; mask < (1u << dom.size()); ++mask) {
                    if (std::popcount(mask) > b.maxLinksPerAssoc) continue;
                    s.ds.links.erase(id);
                    for (std::size_t i = 0; i < dom.size(); ++i)
                        if (mask & (1u << i)) s.ds.links[id].push_back(dom[i]);
                    if (links(di + 1)) return true;
                }
                s.ds.links.erase(id);
                return false;
            };
            if (links(0)) return true;
            // Next assignment.
            std::size_t i = 0;
            for (; i < slots.size(); ++i) {
                if (++assign[i] < carriers.at(slots[i].second.second).size()) break;
                assign[i] = 0;
            }
            if (i == slots.size()) break;
        }
        // Next population.
        std::size_t i = 0;
        for (; i < pop.size(); ++i) {
            if (++pop[i] <= b.maxOidsPerClass) break;
            pop[i] = 0;
        }
        if (i == pop.size()) break;
    }
    return false;
}

}  // namespace umlp::test

#endif
