#include "umlp/consistency.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "umlp/conformance.hpp"

namespace umlp {

namespace {

using ast::ClassDiagram;
using ast::Modifier;

std::string type_name(const ast::TypeRef& t) {
    return t.isVoid() ? "void" : t.name;
}

// The merged universes of a diagram set, fixed by identity translation.
struct Universe {
    std::set<ClassName> classes;             // classes and interfaces
    std::set<ClassName> concrete;            // instantiable classes only
    std::set<std::pair<ClassName, ClassName>> sub;
    std::map<ClassName, std::set<std::pair<std::string, TypeName>>> attrsOf;
    std::map<AssocId, AssocInfo> assocs;
    std::map<MethodId, MethodInfo> meths;
    std::set<TypeName> carrierTypes;
};

Universe build_universe(const std::vector<ClassDiagram>& cds) {
    Universe u;
    std::set<ClassName> abstractOrInterface;
    for (const auto& cd : cds) {
        for (const auto& c : cd.classes) {
            u.classes.insert(c.name);
            if (c.modifiers.count(Modifier::Abstract))
                abstractOrInterface.insert(c.name);
            for (const auto& s : c.superClassNames) u.sub.insert({c.name, s});
            for (const auto& s : c.interfaceNames) u.sub.insert({c.name, s});
            for (const auto& a : c.attrs) {
                u.attrsOf[c.name].insert({a.name, type_name(a.type)});
                u.carrierTypes.insert(type_name(a.type));
            }
            for (const auto& m : c.meths) {
                MethodInfo info;
                info.className = c.name;
                info.name = m.name;
                for (const auto& p : m.formalParams)
                    info.paramTypes.push_back(type_name(p.type));
                info.retType = type_name(m.returnType);
                u.meths.emplace(method_key(c.name, m), info);
            }
        }
        for (const auto& i : cd.interfaces) {
            u.classes.insert(i.name);
            abstractOrInterface.insert(i.name);
            for (const auto& s : i.superInterfaceNames) u.sub.insert({i.name, s});
            for (const auto& a : i.attrs) {
                u.attrsOf[i.name].insert({a.name, type_name(a.type)});
                u.carrierTypes.insert(type_name(a.type));
            }
        }
        for (const auto& a : cd.assocs) {
            AssocInfo info;
            info.leftClass = a.leftPart.className;
            info.rightClass = a.rightPart.className;
            for (bool leftSide : {true, false}) {
                const auto& end = leftSide ? a.leftPart : a.rightPart;
                if (end.qualifier) {
                    if (end.qualifier->kind == ast::Qualifier::Kind::ByType) {
                        info.qualifierKind = QualifierKind::ByValueType;
                        info.qualifierRef = end.qualifier->type.name;
                        u.carrierTypes.insert(end.qualifier->type.name);
                    } else {
                        info.qualifierKind = QualifierKind::ByAttr;
                        info.qualifierRef = end.qualifier->attrName;
                    }
                }
                if (end.modifiers.count(Modifier::Ordered))
                    info.orderedEnd = leftSide ? OrderedEnd::Left : OrderedEnd::Right;
            }
            u.assocs.emplace(assoc_key(a), info);
        }
    }
    // Drop sub edges to names that are not declared anywhere.
    for (auto it = u.sub.begin(); it != u.sub.end();) {
        if (!u.classes.count(it->second)) it = u.sub.erase(it);
        else ++it;
    }
    for (const auto& c : u.classes)
        if (!abstractOrInterface.count(c)) u.concrete.insert(c);
    return u;
}

std::vector<Value> make_carrier(const TypeName& t, int size) {
    std::vector<Value> out;
    if (t == "boolean") {
        out.push_back(false);
        if (size > 1) out.push_back(true);
        return out;
    }
    if (t == "double" || t == "float") {
        for (int i = 0; i < size; ++i) out.push_back(static_cast<double>(i));
        return out;
    }
    if (t == "int" || t == "long" || t == "short" || t == "byte") {
        for (int i = 0; i < size; ++i) out.push_back(static_cast<std::int64_t>(i));
        return out;
    }
    // String, char and reference-typed attributes: symbolic string values.
    for (int i = 0; i < size; ++i)
        out.push_back(std::string("v") + std::to_string(i));
    return out;
}

class Enumerator {
public:
    Enumerator(const std::vector<ClassDiagram>& cds, const Bounds& b,
               const ModelVisitor& visit)
        : bounds_(b), visit_(visit), universe_(build_universe(cds)) {
        for (const auto& t : universe_.carrierTypes) {
            auto it = bounds_.carrierSizes.find(t);
            int size = it != bounds_.carrierSizes.end() ? it->second
                                                        : bounds_.defaultCarrierSize;
            carriers_[t] = make_carrier(t, std::max(1, size));
        }
        // Attributes of an instance include inherited ones along sub.
        for (const auto& c : universe_.concrete)
            allAttrs_[c] = collectAttrs(c);
    }

    double estimateSpace() const {
        double total = 1.0;
        for (const auto& c : universe_.concrete) {
            double perClass = 0.0;
            for (int n = 0; n <= bounds_.maxOidsPerClass; ++n) {
                double combos = 1.0;
                for (const auto& [attr, type] : allAttrs_.at(c)) {
                    double car = static_cast<double>(carriers_.at(type).size());
                    combos *= std::pow(car, n);
                }
                perClass += combos;
            }
            total *= perClass;
            if (total > 1e18) return total;
        }
        // Links: for each association, subsets of the pair domain capped
        // by maxLinksPerAssoc; bounded above by 2^min(domain, cap-driven).
        int maxOids = bounds_.maxOidsPerClass;
        for (const auto& [id, info] : universe_.assocs) {
            double domain = static_cast<double>(maxOids) * maxOids;
            if (info.qualifierKind == QualifierKind::ByValueType)
                domain *= static_cast<double>(
                    carriers_.count(info.qualifierRef)
                        ? carriers_.at(info.qualifierRef).size()
                        : bounds_.defaultCarrierSize);
            double subsets = 0.0, binom = 1.0;
            for (int k = 0; k <= bounds_.maxLinksPerAssoc && k <= domain; ++k) {
                subsets += binom;
                binom = binom * (domain - k) / (k + 1);
            }
            total *= std::max(1.0, subsets);
            if (total > 1e18) return total;
        }
        return total;
    }

    Result<long long> run() {
        if (estimateSpace() > bounds_.spaceCeiling) {
            return Result<long long>::failure(Diagnostic{
                "BoundsTooLarge", Severity::Error,
                "estimated search space exceeds the configured ceiling",
                "bounds"});
        }
        stopped_ = false;
        count_ = 0;
        if (bounds_.allowEmptyTrace) {
            if (!yield(SystemState{}, false)) return Result<long long>::success(count_);
        }
        std::vector<ClassName> classOrder(universe_.concrete.begin(),
                                          universe_.concrete.end());
        std::vector<int> population(classOrder.size(), 0);
        enumPopulation(classOrder, population, 0);
        return Result<long long>::success(count_);
    }

private:
    std::set<std::pair<std::string, TypeName>> collectAttrs(const ClassName& c) const {
        std::set<std::pair<std::string, TypeName>> out;
        std::set<ClassName> visited;
        std::vector<ClassName> work{c};
        while (!work.empty()) {
            ClassName cur = work.back();
            work.pop_back();
            if (!visited.insert(cur).second) continue;
            if (auto it = universe_.attrsOf.find(cur); it != universe_.attrsOf.end())
                out.insert(it->second.begin(), it->second.end());
            for (const auto& [sub_, super] : universe_.sub)
                if (sub_ == cur) work.push_back(super);
        }
        return out;
    }

    SystemModel baseModel() const {
        SystemModel sys;
        for (const auto& [t, carrier] : carriers_) sys.types[t] = carrier;
        sys.uclasses = universe_.classes;
        sys.sub = universe_.sub;
        sys.attrsOf = universe_.attrsOf;
        sys.uassocs = universe_.assocs;
        sys.umeths = universe_.meths;
        return sys;
    }

    bool yield(SystemState state, bool withState) {
        SystemModel sys = baseModel();
        for (const auto& [cls, oids] : oids_)
            for (const auto& oid : oids) sys.uoids[oid] = cls;
        if (withState) {
            state.id = "s0";
            sys.states.push_back(std::move(state));
            sys.reachable.insert("s0");
        }
        ++count_;
        if (!visit_(sys)) {
            stopped_ = true;
            return false;
        }
        return true;
    }

    void enumPopulation(const std::vector<ClassName>& order,
                        std::vector<int>& population, std::size_t idx) {
        if (stopped_) return;
        if (idx == order.size()) {
            oids_.clear();
            for (std::size_t i = 0; i < order.size(); ++i) {
                auto& v = oids_[order[i]];
                for (int k = 1; k <= population[i]; ++k)
                    v.push_back(order[i] + "-" + std::to_string(k));
            }
            SystemState state;
            for (const auto& [cls, oids] : oids_)
                for (const auto& oid : oids) state.ds.liveOids.insert(oid);
            enumAttrs(state);
            return;
        }
        for (int n = 0; n <= bounds_.maxOidsPerClass && !stopped_; ++n) {
            population[idx] = n;
            enumPopulation(order, population, idx + 1);
        }
    }

    // Per class, assign each oid a full attribute vector; vectors must be
    // non-decreasing across the oids of one class (symmetry reduction).
    void enumAttrs(SystemState& state) {
        std::vector<std::pair<ClassName, std::vector<std::string>>> work;
        for (const auto& [cls, oids] : oids_)
            if (!oids.empty() && !allAttrs_.at(cls).empty())
                work.push_back({cls, oids});
        enumAttrsFor(state, work, 0);
    }

    void enumAttrsFor(
        SystemState& state,
        const std::vector<std::pair<ClassName, std::vector<std::string>>>& work,
        std::size_t idx) {
        if (stopped_) return;
        if (idx == work.size()) {
            enumLinksFor(state, universe_.assocs.begin());
            return;
        }
        const auto& [cls, oids] = work[idx];
        std::vector<std::pair<std::string, TypeName>> attrs(
            allAttrs_.at(cls).begin(), allAttrs_.at(cls).end());
        std::vector<std::vector<std::size_t>> vectors(oids.size());
        enumVectors(state, work, idx, cls, oids, attrs, vectors, 0, 0);
    }

    void enumVectors(
        SystemState& state,
        const std::vector<std::pair<ClassName, std::vector<std::string>>>& work,
        std::size_t workIdx, const ClassName& cls,
        const std::vector<std::string>& oids,
        const std::vector<std::pair<std::string, TypeName>>& attrs,
        std::vector<std::vector<std::size_t>>& vectors, std::size_t oidIdx,
        std::size_t attrIdx) {
        if (stopped_) return;
        if (oidIdx == oids.size()) {
            for (std::size_t i = 0; i < oids.size(); ++i)
                for (std::size_t j = 0; j < attrs.size(); ++j)
                    state.ds.attrVal[{oids[i], attrs[j].first}] =
                        carriers_.at(attrs[j].second)[vectors[i][j]];
            enumAttrsFor(state, work, workIdx + 1);
            for (std::size_t i = 0; i < oids.size(); ++i)
                for (std::size_t j = 0; j < attrs.size(); ++j)
                    state.ds.attrVal.erase({oids[i], attrs[j].first});
            return;
        }
        if (attrIdx == attrs.size()) {
            // Canonical order: this oid's vector must not precede the
            // previous oid's vector.
            if (oidIdx > 0 && vectors[oidIdx] < vectors[oidIdx - 1]) return;
            enumVectors(state, work, workIdx, cls, oids, attrs, vectors,
                        oidIdx + 1, 0);
            return;
        }
        std::size_t carrierSize = carriers_.at(attrs[attrIdx].second).size();
        vectors[oidIdx].resize(attrs.size());
        for (std::size_t v = 0; v < carrierSize && !stopped_; ++v) {
            vectors[oidIdx][attrIdx] = v;
            enumVectors(state, work, workIdx, cls, oids, attrs, vectors, oidIdx,
                        attrIdx + 1);
        }
    }

    void enumLinksFor(SystemState& state,
                      std::map<AssocId, AssocInfo>::const_iterator it) {
        if (stopped_) return;
        if (it == universe_.assocs.end()) {
            yield(state, true);
            return;
        }
        const auto& [id, info] = *it;
        auto next = std::next(it);
        std::vector<Link> domain = linkDomain(info);
        // All subsets up to maxLinksPerAssoc, in canonical index order.
        std::vector<std::size_t> chosen;
        enumSubsets(state, id, info, domain, chosen, 0, next);
    }

    std::vector<Link> linkDomain(const AssocInfo& info) const {
        std::vector<Link> out;
        auto leftIt = oids_.find(info.leftClass);
        auto rightIt = oids_.find(info.rightClass);
        if (leftIt == oids_.end() || rightIt == oids_.end()) return out;
        for (const auto& l : leftIt->second) {
            for (const auto& r : rightIt->second) {
                if (info.qualifierKind == QualifierKind::ByValueType) {
                    auto carrierIt = carriers_.find(info.qualifierRef);
                    if (carrierIt == carriers_.end()) continue;
                    for (const auto& q : carrierIt->second)
                        out.push_back(Link{l, r, q, std::nullopt});
                } else {
                    out.push_back(Link{l, r, std::nullopt, std::nullopt});
                }
            }
        }
        return out;
    }

    void enumSubsets(SystemState& state, const AssocId& id, const AssocInfo& info,
                     const std::vector<Link>& domain,
                     std::vector<std::size_t>& chosen, std::size_t from,
                     std::map<AssocId, AssocInfo>::const_iterator next) {
        if (stopped_) return;
        // Emit the current subset, then extend it.
        std::vector<Link> links;
        for (std::size_t i : chosen) links.push_back(domain[i]);
        if (info.orderedEnd != OrderedEnd::None) {
            // Group into (from, sorted list) links, the ordered encoding.
            std::map<Oid, std::vector<Oid>> grouped;
            for (const auto& l : links) grouped[l.from].push_back(*l.to);
            links.clear();
            for (auto& [fromOid, toList] : grouped)
                links.push_back(Link{fromOid, std::nullopt, std::nullopt, toList});
        }
        if (!links.empty()) state.ds.links[id] = links;
        else state.ds.links.erase(id);
        enumLinksFrom(state, next);
        state.ds.links.erase(id);

        if (chosen.size() >= static_cast<std::size_t>(bounds_.maxLinksPerAssoc))
            return;
        for (std::size_t i = from; i < domain.size() && !stopped_; ++i) {
            chosen.push_back(i);
            enumSubsets(state, id, info, domain, chosen, i + 1, next);
            chosen.pop_back();
        }
    }

    void enumLinksFrom(SystemState& state,
                       std::map<AssocId, AssocInfo>::const_iterator it) {
        enumLinksFor(state, it);
    }

    const Bounds& bounds_;
    const ModelVisitor& visit_;
    Universe universe_;
    std::map<TypeName, std::vector<Value>> carriers_;
    std::map<ClassName, std::set<std::pair<std::string, TypeName>>> allAttrs_;
    std::map<ClassName, std::vector<std::string>> oids_;
    long long count_ = 0;
    bool stopped_ = false;
};

}  // namespace

Result<long long> enumerate_models(const std::vector<ClassDiagram>& cds,
                                   const Bounds& b, const ModelVisitor& visit) {
    return Enumerator(cds, b, visit).run();
}

Result<ConsistencyResult> bounded_consistency(
    const std::vector<ClassDiagram>& cds, const Bounds& b) {
    ConsistencyResult result;
    result.bounds = b;
    auto start = std::chrono::steady_clock::now();

    auto enumerated = enumerate_models(cds, b, [&](const SystemModel& sys) {
        ++result.stats.modelsExamined;
        if (!b.allowEmptyTrace && sys.reachable.empty()) return true;
        ConformanceReport report = check_conformance(cds, sys);
        if (report.aggregatePass) {
            result.consistent = true;
            result.witness = sys;
            return false;
        }
        return true;
    });
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!enumerated.ok())
        return Result<ConsistencyResult>::failure(enumerated.diags);
    return Result<ConsistencyResult>::success(std::move(result));
}

}  // namespace umlp
