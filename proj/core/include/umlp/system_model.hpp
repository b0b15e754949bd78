#ifndef UMLP_SYSTEM_MODEL_HPP
#define UMLP_SYSTEM_MODEL_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "umlp/diag.hpp"
#include "umlp/value.hpp"

namespace umlp {

using Oid = std::string;
using TypeName = std::string;
using ClassName = std::string;
using AssocId = std::string;
using MethodId = std::string;

/// One association tuple in a data store. Exactly one of `to` / `toList`
/// is set: `toList` is used on associations with an ordered end and holds
/// the ordered oids of that end; `qual` is set on type-qualified links.
struct Link {
    Oid from;
    std::optional<Oid> to;
    std::optional<Value> qual;
    std::optional<std::vector<Oid>> toList;

    auto operator<=>(const Link&) const = default;
};

struct DataStore {
    std::set<Oid> liveOids;  // oids(ds)
    std::map<std::pair<Oid, std::string>, Value> attrVal;
    std::map<AssocId, std::vector<Link>> links;

    auto operator<=>(const DataStore&) const = default;
};

struct ControlStore {
    // (oid, thread) -> stack depth; 0/absent = empty.
    std::map<std::pair<Oid, std::string>, int> frames;

    bool objectInactive(const Oid& oid) const;
    auto operator<=>(const ControlStore&) const = default;
};

struct Message {
    Oid sender;
    std::string opName;
    std::vector<Value> args;
    auto operator<=>(const Message&) const = default;
};

struct EventStore {
    std::map<Oid, std::vector<Message>> received;  // receive events per oid
    auto operator<=>(const EventStore&) const = default;
};

struct SystemState {
    std::string id;
    DataStore ds;
    ControlStore cs;
    EventStore es;
    auto operator<=>(const SystemState&) const = default;
};

struct Transition {
    std::string from;
    std::string to;
    Value input{};
    Value output{};
    auto operator<=>(const Transition&) const = default;
};

enum class QualifierKind { None, ByValueType, ByAttr };
enum class OrderedEnd { None, Left, Right };

struct AssocInfo {
    ClassName leftClass;
    ClassName rightClass;
    QualifierKind qualifierKind = QualifierKind::None;
    std::string qualifierRef;  // type name or attribute name
    OrderedEnd orderedEnd = OrderedEnd::None;
    auto operator<=>(const AssocInfo&) const = default;
};

struct MethodInfo {
    ClassName className;
    std::string name;
    std::vector<TypeName> paramTypes;
    TypeName retType;
    auto operator<=>(const MethodInfo&) const = default;
};

/// Finite explicit-state view of the semantic domain: enumerated states,
/// an explicit transition edge set, and a declared reachable subset.
struct SystemModel {
    std::map<TypeName, std::vector<Value>> types;  // CAR per type
    std::set<ClassName> uclasses;
    std::set<std::pair<ClassName, ClassName>> sub;  // (subclass, superclass), direct
    std::map<ClassName, std::set<std::pair<std::string, TypeName>>> attrsOf;
    std::map<AssocId, AssocInfo> uassocs;
    std::map<MethodId, MethodInfo> umeths;
    std::map<Oid, ClassName> uoids;  // classOfOid
    std::vector<SystemState> states;
    std::vector<Transition> transitions;
    std::set<std::string> reachable;

    auto operator<=>(const SystemModel&) const = default;

    const SystemState* findState(const std::string& id) const;
    std::vector<const SystemState*> reachableStates() const;

    /// Attribute set of a class including inherited attributes along sub*.
    std::set<std::pair<std::string, TypeName>> allAttrsOf(const ClassName& c) const;
};

/// Reflexive-transitive closure of the direct subclass relation; fails
/// with a CycleError diagnostic when sub has a cycle.
Result<std::set<std::pair<ClassName, ClassName>>> sub_star(const SystemModel& sys);

/// relOf(trans_a(a))(ds): the link set of one association, empty when the
/// state declares none. Throws std::out_of_range for an undeclared id.
const std::vector<Link>& rel_of(const SystemModel& sys, const AssocId& a,
                                const DataStore& ds);

/// Restricts a state to its inactive objects: live oids with every thread
/// stack empty; attribute values and links touching active objects drop.
SystemState inactive_view(const SystemState& s);

/// Expands a link to plain (from, to) pairs; ordered links contribute one
/// pair per list member.
std::vector<std::pair<Oid, Oid>> link_pairs(const Link& link);

}  // namespace umlp

#endif
