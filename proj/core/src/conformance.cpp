#include "umlp/conformance.hpp"

#include <algorithm>

#include "umlp/minicond.hpp"

namespace umlp {

namespace {

using ast::AssocDef;
using ast::AttrDef;
using ast::ClassDef;
using ast::ClassDiagram;
using ast::InterfaceDef;
using ast::MethodDef;
using ast::Modifier;
using ast::TypeRef;

std::string type_name(const TypeRef& t) {
    return t.isVoid() ? "void" : t.name;
}

std::vector<TypeName> param_type_names(const MethodDef& m) {
    std::vector<TypeName> out;
    for (const auto& p : m.formalParams) out.push_back(type_name(p.type));
    return out;
}

std::string signature(const MethodDef& m) {
    std::string s = m.name + "(";
    bool first = true;
    for (const auto& t : param_type_names(m)) {
        if (!first) s += ",";
        s += t;
        first = false;
    }
    return s + ")";
}

using SubStar = std::set<std::pair<ClassName, ClassName>>;

struct EndBounds {
    ast::CardBounds left;   // m1..m2
    ast::CardBounds right;  // n1..n2
};

EndBounds bounds_of(const AssocDef& a) {
    return EndBounds{ast::card_bounds(a.leftPart.card),
                     ast::card_bounds(a.rightPart.card)};
}

bool within(long n, const ast::CardBounds& b) {
    if (n < b.min) return false;
    if (b.max && n > *b.max) return false;
    return true;
}

class ConformanceChecker {
public:
    ConformanceChecker(const ClassDiagram& cd, const SystemModel& sys,
                       const TransMap& tm)
        : cd_(cd), sys_(sys), tm_(tm) {
        auto closure = sub_star(sys);
        if (closure.ok()) subStar_ = *closure;
        reachable_ = sys_.reachableStates();
    }

    std::vector<ConditionResult> runStatic() {
        results_.clear();
        // Checks keep references into results_ across later begin() calls,
        // so the vector must never reallocate within one run.
        results_.reserve(conformance_codes().size());
        sm1a();
        sm1b();
        sm1c();
        sm1d();
        outOfScope("SM-1e");
        sm2a();
        sm2b();
        sm2c();
        sm3();
        return std::move(results_);
    }

    std::vector<ConditionResult> runDynamic() {
        results_.clear();
        results_.reserve(conformance_codes().size());
        sm4a();
        sm4b();
        sm4c();
        outOfScope("SM-4c.iii");
        outOfScope("SM-4c.iv");
        sm5();
        sm6();
        sm7();
        return std::move(results_);
    }

private:
    ConditionResult& begin(const std::string& code) {
        results_.push_back(ConditionResult{code, Verdict::Pass, {}});
        return results_.back();
    }

    void outOfScope(const std::string& code) {
        results_.push_back(ConditionResult{code, Verdict::OutOfScope, {}});
    }

    static void fail(ConditionResult& r, std::string state, std::string detail) {
        r.verdict = Verdict::Fail;
        r.witnesses.push_back(Witness{std::move(state), std::move(detail)});
    }

    bool transTOk(const ast::Name& n) const { return tm_.transT.count(n) > 0; }

    bool inSubStar(const ClassName& a, const ClassName& b) const {
        return subStar_.count({a, b}) > 0;
    }

    bool attrsPreserved(const ast::Name& owner,
                        const std::set<AttrDef>& attrs,
                        ConditionResult& r) {
        bool ok = true;
        auto sysAttrs = sys_.allAttrsOf(owner);
        for (const auto& a : attrs) {
            if (!sysAttrs.count({a.name, type_name(a.type)})) {
                fail(r, "",
                     "attribute (" + a.name + ", " + type_name(a.type) +
                         ") of '" + owner + "' is missing in the system model");
                ok = false;
            }
        }
        return ok;
    }

    // --- static conditions ---

    void sm1a() {
        auto& r = begin("SM-1a");
        for (const auto& c : cd_.classes) {
            if (!sys_.uclasses.count(c.name)) {
                fail(r, "", "class '" + c.name + "' does not exist in the system model");
                continue;
            }
            attrsPreserved(c.name, c.attrs, r);
        }
    }

    void sm1b() {
        auto& r = begin("SM-1b");
        for (const auto& c : cd_.classes) {
            std::set<ast::Name> supers = c.superClassNames;
            supers.insert(c.interfaceNames.begin(), c.interfaceNames.end());
            for (const auto& n : supers) {
                if (!cd_.findClass(n) && !cd_.findInterface(n)) continue;
                if (!sys_.uclasses.count(n) || !inSubStar(c.name, n))
                    fail(r, "",
                         "'" + c.name + "' is not a subclass of '" + n +
                             "' in the system model");
            }
        }
    }

    void sm1c() {
        auto& r = begin("SM-1c");
        for (const auto& c : cd_.classes) {
            if (!c.modifiers.count(Modifier::Final)) continue;
            for (const auto& [subc, superc] : subStar_) {
                if (superc == c.name && subc != c.name)
                    fail(r, "",
                         "final class '" + c.name + "' has subclass '" + subc +
                             "' in the system model");
            }
        }
    }

    // 1d.i existence, 1d.ii correct class.
    void sm1d() {
        auto& existence = begin("SM-1d.i");
        ConditionResult belongs{"SM-1d.ii", Verdict::Pass, {}};
        for (const auto& c : cd_.classes) {
            for (const auto& m : c.meths) {
                bool foundHere = false, foundElsewhere = false;
                std::string otherClass;
                for (const auto& [id, info] : sys_.umeths) {
                    if (info.name != m.name || info.paramTypes != param_type_names(m))
                        continue;
                    if (info.className == c.name) foundHere = true;
                    else {
                        foundElsewhere = true;
                        otherClass = info.className;
                    }
                }
                if (foundHere) continue;
                if (foundElsewhere)
                    fail(belongs, "",
                         "method '" + signature(m) + "' of '" + c.name +
                             "' belongs to '" + otherClass + "' in the system model");
                else
                    fail(existence, "",
                         "method '" + signature(m) + "' of '" + c.name +
                             "' does not exist in the system model");
            }
        }
        results_.push_back(std::move(belongs));
    }

    void sm2a() {
        auto& r = begin("SM-2a");
        for (const auto& i : cd_.interfaces) {
            if (!sys_.uclasses.count(i.name)) {
                fail(r, "",
                     "interface '" + i.name + "' does not exist as a class in the "
                     "system model");
                continue;
            }
            attrsPreserved(i.name, i.attrs, r);
        }
    }

    // Interface methods are implemented strictly below the interface class.
    void sm2b() {
        auto& r = begin("SM-2b");
        for (const auto& i : cd_.interfaces) {
            for (const auto& m : i.meths) {
                for (const auto& [id, info] : sys_.umeths) {
                    if (info.name != m.name || info.paramTypes != param_type_names(m))
                        continue;
                    if (!inSubStar(info.className, i.name)) continue;
                    if (info.className == i.name)
                        fail(r, "",
                             "method '" + signature(m) +
                                 "' is implemented by the interface class '" +
                                 i.name + "' itself");
                }
            }
        }
    }

    void sm2c() {
        auto& r = begin("SM-2c");
        for (const auto& i : cd_.interfaces) {
            for (const auto& n : i.superInterfaceNames) {
                if (!cd_.findInterface(n)) continue;
                if (!sys_.uclasses.count(n) || !inSubStar(i.name, n))
                    fail(r, "",
                         "'" + i.name + "' is not a subclass of '" + n +
                             "' in the system model");
            }
        }
    }

    void sm3() {
        auto& r = begin("SM-3");
        for (const auto& a : cd_.assocs) {
            const std::string key = assoc_key(a);
            auto it = tm_.transA.find(key);
            if (it == tm_.transA.end()) {
                fail(r, "",
                     "association '" + key + "' has no counterpart in the system "
                     "model");
                continue;
            }
            const AssocInfo& info = sys_.uassocs.at(it->second);
            if (info.leftClass != a.leftPart.className ||
                info.rightClass != a.rightPart.className)
                fail(r, "",
                     "association '" + key + "' connects (" + info.leftClass + ", " +
                         info.rightClass + ") in the system model");
        }
    }

    // --- dynamic conditions ---

    ClassName classOf(const Oid& oid) const {
        auto it = sys_.uoids.find(oid);
        return it == sys_.uoids.end() ? ClassName{} : it->second;
    }

    void sm4a() {
        auto& r = begin("SM-4a");
        for (const auto& c : cd_.classes) {
            if (!c.modifiers.count(Modifier::Abstract)) continue;
            for (const auto* s : reachable_) {
                for (const auto& oid : s->ds.liveOids) {
                    if (classOf(oid) == c.name)
                        fail(r, s->id,
                             "instance '" + oid + "' of abstract class '" + c.name +
                                 "'");
                }
            }
        }
    }

    std::optional<Value> attrValue(const SystemState& s, const Oid& oid,
                                   const std::string& attr) const {
        auto it = s.ds.attrVal.find({oid, attr});
        if (it == s.ds.attrVal.end()) return std::nullopt;
        return it->second;
    }

    void sm4b() {
        auto& finalAttrs = begin("SM-4b.i");
        for (const auto& c : cd_.classes) {
            for (const auto& a : c.attrs) {
                if (!a.modifiers.count(Modifier::Final)) continue;
                for (const auto* s1 : reachable_) {
                    for (const auto* s2 : reachable_) {
                        for (const auto& oid : s1->ds.liveOids) {
                            if (!s2->ds.liveOids.count(oid)) continue;
                            if (classOf(oid) != c.name) continue;
                            auto v1 = attrValue(*s1, oid, a.name);
                            auto v2 = attrValue(*s2, oid, a.name);
                            if (v1 != v2 && s1->id < s2->id)
                                fail(finalAttrs, s1->id + "," + s2->id,
                                     "final attribute '" + a.name + "' of '" + oid +
                                         "' changes value");
                        }
                    }
                }
            }
        }
        auto& staticAttrs = begin("SM-4b.ii");
        for (const auto& c : cd_.classes) {
            for (const auto& a : c.attrs) {
                if (!a.modifiers.count(Modifier::Static)) continue;
                for (const auto* s : reachable_) {
                    std::optional<std::pair<Oid, Value>> first;
                    for (const auto& oid : s->ds.liveOids) {
                        if (classOf(oid) != c.name) continue;
                        auto v = attrValue(*s, oid, a.name);
                        if (!v) continue;
                        if (!first) {
                            first = {oid, *v};
                        } else if (first->second != *v) {
                            fail(staticAttrs, s->id,
                                 "static attribute '" + a.name + "' differs between '" +
                                     first->first + "' and '" + oid + "'");
                        }
                    }
                }
            }
        }
    }

    void sm4c() {
        auto& priv = begin("SM-4c.i");
        auto& prot = begin("SM-4c.ii");
        for (const auto& c : cd_.classes) {
            for (const auto& m : c.meths) {
                bool isPrivate = m.modifiers.count(Modifier::Private) > 0;
                bool isProtected = m.modifiers.count(Modifier::Protected) > 0;
                if (!isPrivate && !isProtected) continue;
                for (const auto* s : reachable_) {
                    for (const auto& [oid, msgs] : s->es.received) {
                        if (classOf(oid) != c.name) continue;
                        for (const auto& msg : msgs) {
                            if (msg.opName != m.name) continue;
                            ClassName senderClass = classOf(msg.sender);
                            if (isPrivate && senderClass != c.name)
                                fail(priv, s->id,
                                     "private method '" + m.name + "' of '" + oid +
                                         "' called by '" + msg.sender + "' of class '" +
                                         senderClass + "'");
                            if (isProtected && !inSubStar(senderClass, c.name))
                                fail(prot, s->id,
                                     "protected method '" + m.name + "' of '" + oid +
                                         "' called by '" + msg.sender + "' of class '" +
                                         senderClass + "'");
                        }
                    }
                }
            }
        }
    }

    void sm5() {
        auto& r = begin("SM-5");
        for (const auto& i : cd_.interfaces) {
            for (const auto* s : reachable_) {
                for (const auto& oid : s->ds.liveOids) {
                    if (classOf(oid) == i.name)
                        fail(r, s->id,
                             "instance '" + oid + "' of interface '" + i.name + "'");
                }
            }
        }
    }

    void sm6() {
        auto& r = begin("SM-6");
        for (const auto& inv : cd_.invs) {
            if (!inv.cond) continue;
            for (const auto* s : reachable_) {
                SystemState view = inactive_view(*s);
                auto outcome = minicond::eval_cond(*inv.cond, view, sys_);
                if (outcome.isError())
                    fail(r, s->id,
                         "invariant [" + inv.text + "]: EvalError: " + outcome.error);
                else if (!outcome.isTrue())
                    fail(r, s->id, "invariant [" + inv.text + "] does not hold");
            }
        }
    }

    const AssocId* sysAssoc(const AssocDef& a) const {
        auto it = tm_.transA.find(assoc_key(a));
        return it == tm_.transA.end() ? nullptr : &it->second;
    }

    static bool ordered(const AssocDef& a) {
        return a.leftPart.modifiers.count(Modifier::Ordered) ||
               a.rightPart.modifiers.count(Modifier::Ordered);
    }

    std::vector<std::pair<Oid, Oid>> pairsOf(const AssocId& id,
                                             const DataStore& ds) const {
        std::vector<std::pair<Oid, Oid>> out;
        for (const Link& l : rel_of(sys_, id, ds)) {
            auto p = link_pairs(l);
            out.insert(out.end(), p.begin(), p.end());
        }
        return out;
    }

    // Shared by 7a (plain associations) and 7g (ordered ones).
    void multiplicityCheck(ConditionResult& r, const AssocDef& a,
                           const AssocId& id) {
        EndBounds b = bounds_of(a);
        for (const auto* s : reachable_) {
            auto pairs = pairsOf(id, s->ds);
            for (const auto& oid : s->ds.liveOids) {
                if (classOf(oid) == a.leftPart.className) {
                    long n = std::count_if(pairs.begin(), pairs.end(),
                                           [&](const auto& p) { return p.first == oid; });
                    if (!within(n, b.right))
                        fail(r, s->id,
                             "'" + oid + "' has " + std::to_string(n) + " '" +
                                 assoc_key(a) + "' links, outside the right bounds");
                }
                if (classOf(oid) == a.rightPart.className) {
                    long n = std::count_if(pairs.begin(), pairs.end(),
                                           [&](const auto& p) { return p.second == oid; });
                    if (!within(n, b.left))
                        fail(r, s->id,
                             "'" + oid + "' has " + std::to_string(n) + " '" +
                                 assoc_key(a) + "' links, outside the left bounds");
                }
            }
        }
    }

    void sm7() {
        // 7a
        auto& mult = begin("SM-7a");
        for (const auto& a : cd_.assocs) {
            if (a.leftPart.qualifier || a.rightPart.qualifier || ordered(a)) continue;
            const AssocId* id = sysAssoc(a);
            if (!id) continue;
            multiplicityCheck(mult, a, *id);
        }

        // 7b: type qualifiers, counted over the full carrier
        auto& typeQual = begin("SM-7b");
        bool anyTypeQual = false;
        for (const auto& a : cd_.assocs) {
            EndBounds b = bounds_of(a);
            for (bool leftSide : {true, false}) {
                const auto& end = leftSide ? a.leftPart : a.rightPart;
                if (!end.qualifier ||
                    end.qualifier->kind != ast::Qualifier::Kind::ByType)
                    continue;
                anyTypeQual = true;
                const AssocId* id = sysAssoc(a);
                if (!id) continue;
                auto carrierIt = sys_.types.find(end.qualifier->type.name);
                if (carrierIt == sys_.types.end()) {
                    fail(typeQual, "",
                         "qualifier type '" + end.qualifier->type.name +
                             "' has no carrier in the system model");
                    continue;
                }
                const ast::CardBounds& bound = leftSide ? b.right : b.left;
                for (const auto* s : reachable_) {
                    const auto& links = rel_of(sys_, *id, s->ds);
                    for (const Value& q : carrierIt->second) {
                        long n = std::count_if(
                            links.begin(), links.end(),
                            [&](const Link& l) { return l.qual && *l.qual == q; });
                        if (!within(n, bound))
                            fail(typeQual, s->id,
                                 "qualifier value " + value_to_string(q) + " selects " +
                                     std::to_string(n) + " '" + assoc_key(a) +
                                     "' links, outside the bounds");
                    }
                }
            }
        }
        if (!anyTypeQual && typeQual.verdict == Verdict::Pass)
            typeQual.verdict = Verdict::NotApplicable;

        // 7c: attribute-name qualifiers
        auto& attrQual = begin("SM-7c");
        bool anyAttrQual = false;
        for (const auto& a : cd_.assocs) {
            EndBounds b = bounds_of(a);
            for (bool leftSide : {true, false}) {
                const auto& end = leftSide ? a.leftPart : a.rightPart;
                if (!end.qualifier ||
                    end.qualifier->kind != ast::Qualifier::Kind::ByAttrName)
                    continue;
                anyAttrQual = true;
                const AssocId* id = sysAssoc(a);
                if (!id) continue;
                const std::string& atname = end.qualifier->attrName;
                // The qualifier keys objects of the opposite class.
                const ast::Name& oppClass =
                    leftSide ? a.rightPart.className : a.leftPart.className;
                const ast::CardBounds& bound = leftSide ? b.right : b.left;
                for (const auto* s : reachable_) {
                    auto pairs = pairsOf(*id, s->ds);
                    for (const auto& ref : s->ds.liveOids) {
                        if (classOf(ref) != oppClass) continue;
                        auto refVal = attrValue(*s, ref, atname);
                        if (!refVal) continue;
                        long n = std::count_if(
                            pairs.begin(), pairs.end(), [&](const auto& p) {
                                const Oid& keyed = leftSide ? p.second : p.first;
                                auto v = attrValue(*s, keyed, atname);
                                return v && *v == *refVal;
                            });
                        if (!within(n, bound))
                            fail(attrQual, s->id,
                                 "qualifier '" + atname + "' of '" + ref +
                                     "' selects " + std::to_string(n) + " '" +
                                     assoc_key(a) + "' links, outside the bounds");
                    }
                }
            }
        }
        if (!anyAttrQual && attrQual.verdict == Verdict::Pass)
            attrQual.verdict = Verdict::NotApplicable;

        // Transitions whose endpoints are both reachable.
        std::vector<const Transition*> edges;
        for (const auto& t : sys_.transitions)
            if (sys_.reachable.count(t.from) && sys_.reachable.count(t.to))
                edges.push_back(&t);

        // 7d
        auto& addonly = begin("SM-7d");
        for (const auto& a : cd_.assocs) {
            if (!a.leftPart.modifiers.count(Modifier::Addonly) &&
                !a.rightPart.modifiers.count(Modifier::Addonly))
                continue;
            const AssocId* id = sysAssoc(a);
            if (!id) continue;
            for (const Transition* t : edges) {
                const SystemState* from = sys_.findState(t->from);
                const SystemState* to = sys_.findState(t->to);
                for (const Link& l : rel_of(sys_, *id, from->ds)) {
                    const auto& after = rel_of(sys_, *id, to->ds);
                    if (std::find(after.begin(), after.end(), l) == after.end())
                        fail(addonly, t->from + "->" + t->to,
                             "addonly link of '" + assoc_key(a) + "' from '" + l.from +
                                 "' was removed");
                }
            }
        }

        // 7e
        auto& frozen = begin("SM-7e");
        for (const auto& a : cd_.assocs) {
            bool left = a.leftPart.modifiers.count(Modifier::Frozen) > 0;
            bool right = a.rightPart.modifiers.count(Modifier::Frozen) > 0;
            if (!left && !right) continue;
            const AssocId* id = sysAssoc(a);
            if (!id) continue;
            for (const Transition* t : edges) {
                auto before = pairsOf(*id, sys_.findState(t->from)->ds);
                auto after = pairsOf(*id, sys_.findState(t->to)->ds);
                auto proj = [](const std::vector<std::pair<Oid, Oid>>& ps,
                               bool firstComponent) {
                    std::set<Oid> out;
                    for (const auto& p : ps)
                        out.insert(firstComponent ? p.first : p.second);
                    return out;
                };
                if (left && proj(before, true) != proj(after, true))
                    fail(frozen, t->from + "->" + t->to,
                         "frozen left end of '" + assoc_key(a) + "' was modified");
                if (right && proj(before, false) != proj(after, false))
                    fail(frozen, t->from + "->" + t->to,
                         "frozen right end of '" + assoc_key(a) + "' was modified");
            }
        }

        // 7f: parts (right end) require a linked whole (left end)
        auto& comp = begin("SM-7f");
        for (const auto& a : cd_.assocs) {
            if (!a.modifiers.count(Modifier::Composition)) continue;
            const AssocId* id = sysAssoc(a);
            if (!id) continue;
            for (const auto* s : reachable_) {
                auto pairs = pairsOf(*id, s->ds);
                for (const auto& part : s->ds.liveOids) {
                    if (classOf(part) != a.rightPart.className) continue;
                    bool hasWhole = false;
                    for (const auto& [whole, p] : pairs) {
                        if (p == part && s->ds.liveOids.count(whole) &&
                            classOf(whole) == a.leftPart.className)
                            hasWhole = true;
                    }
                    if (!hasWhole)
                        fail(comp, s->id,
                             "part '" + part + "' of composition '" + assoc_key(a) +
                                 "' has no whole");
                }
            }
        }

        // 7g: ordered associations, multiplicity over expanded pairs
        auto& orderedCond = begin("SM-7g");
        bool anyOrdered = false;
        for (const auto& a : cd_.assocs) {
            if (!ordered(a)) continue;
            anyOrdered = true;
            const AssocId* id = sysAssoc(a);
            if (!id) continue;
            multiplicityCheck(orderedCond, a, *id);
        }
        if (!anyOrdered && orderedCond.verdict == Verdict::Pass)
            orderedCond.verdict = Verdict::NotApplicable;
    }

    const ClassDiagram& cd_;
    const SystemModel& sys_;
    const TransMap& tm_;
    SubStar subStar_;
    std::vector<const SystemState*> reachable_;
    std::vector<ConditionResult> results_;
};

}  // namespace

std::string assoc_key(const ast::AssocDef& a) {
    if (a.assocName) return *a.assocName;
    return "(" + a.leftPart.className + "--" + a.rightPart.className + ")";
}

std::string method_key(const ast::Name& className, const ast::MethodDef& m) {
    return className + "." + signature(m);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "notApplicable";
        case Verdict::OutOfScope: return "outOfScope";
    }
    return "?";
}

const std::vector<std::string>& conformance_codes() {
    static const std::vector<std::string> kCodes = {
        "SM-1a", "SM-1b", "SM-1c", "SM-1d.i", "SM-1d.ii", "SM-1e",
        "SM-2a", "SM-2b", "SM-2c", "SM-3",
        "SM-4a", "SM-4b.i", "SM-4b.ii",
        "SM-4c.i", "SM-4c.ii", "SM-4c.iii", "SM-4c.iv",
        "SM-5", "SM-6",
        "SM-7a", "SM-7b", "SM-7c", "SM-7d", "SM-7e", "SM-7f", "SM-7g",
    };
    return kCodes;
}

Result<TransMap> build_translation(const ast::ClassDiagram& cd,
                                   const SystemModel& sys) {
    TransMap tm;
    std::vector<Diagnostic> diags;

    auto mapType = [&](const ast::Name& n, bool basic) {
        if (basic ? sys.types.count(n) > 0 : sys.uclasses.count(n) > 0)
            tm.transT.emplace(n, n);
    };
    for (const auto& b : ast::basic_types()) mapType(b, true);
    for (const auto& c : cd.classes) mapType(c.name, false);
    for (const auto& i : cd.interfaces) mapType(i.name, false);

    for (const auto& a : cd.assocs) {
        const std::string key = assoc_key(a);
        if (a.assocName) {
            if (sys.uassocs.count(*a.assocName))
                tm.transA.emplace(key, *a.assocName);
            continue;
        }
        std::vector<AssocId> candidates;
        for (const auto& [id, info] : sys.uassocs) {
            if (info.leftClass == a.leftPart.className &&
                info.rightClass == a.rightPart.className)
                candidates.push_back(id);
        }
        if (candidates.size() == 1) {
            tm.transA.emplace(key, candidates.front());
        } else if (candidates.size() > 1) {
            diags.push_back(Diagnostic{
                "AmbiguousTarget", Severity::Error,
                "association '" + key + "' matches " +
                    std::to_string(candidates.size()) +
                    " system model associations",
                cd.diagramName + "." + key});
        }
    }

    for (const auto& c : cd.classes) {
        for (const auto& m : c.meths) {
            for (const auto& [id, info] : sys.umeths) {
                if (info.className == c.name && info.name == m.name &&
                    info.paramTypes == param_type_names(m)) {
                    tm.transM.emplace(method_key(c.name, m), id);
                    break;
                }
            }
        }
    }

    Result<TransMap> out;
    out.value = std::move(tm);
    out.diags = std::move(diags);
    return out;
}

std::vector<ConditionResult> check_static(const ast::ClassDiagram& cd,
                                          const SystemModel& sys,
                                          const TransMap& tm) {
    return ConformanceChecker(cd, sys, tm).runStatic();
}

std::vector<ConditionResult> check_dynamic(const ast::ClassDiagram& cd,
                                           const SystemModel& sys,
                                           const TransMap& tm) {
    return ConformanceChecker(cd, sys, tm).runDynamic();
}

ConformanceReport check_conformance(const std::vector<ast::ClassDiagram>& cds,
                                    const SystemModel& sys) {
    ConformanceReport report;
    report.aggregatePass = true;
    for (const auto& cd : cds) {
        DiagramReport section;
        section.diagramName = cd.diagramName;
        auto tm = build_translation(cd, sys);
        section.diags = tm.diags;
        auto stat = check_static(cd, sys, *tm);
        auto dyn = check_dynamic(cd, sys, *tm);
        section.results = std::move(stat);
        section.results.insert(section.results.end(), dyn.begin(), dyn.end());
        section.pass = !has_errors(section.diags);
        for (const auto& r : section.results)
            if (r.verdict == Verdict::Fail) section.pass = false;
        report.aggregatePass = report.aggregatePass && section.pass;
        report.sections.push_back(std::move(section));
    }
    return report;
}

}  // namespace umlp
