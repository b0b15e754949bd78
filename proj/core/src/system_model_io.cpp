#include "umlp/system_model_io.hpp"

#include <json.hpp>

namespace umlp {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct LoadFail {
    Diagnostic diag;
};

[[noreturn]] void fail(const char* code, const std::string& path, const std::string& msg) {
    throw LoadFail{Diagnostic{code, Severity::Error, msg, path}};
}

Value fromJson(const json& j, const std::string& path) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    fail("FormatError", path, "expected a scalar value");
}

ordered_json toJson(const Value& v) {
    return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

class Loader {
public:
    Loader(bool strict, std::vector<Diagnostic>& warnings)
        : strict_(strict), warnings_(warnings) {}

    SystemModel run(const json& doc) {
        checkKeys(doc, "$",
                  {"types", "classes", "assocs", "methods", "oids", "states",
                   "transitions", "reachable"});
        loadTypes(member(doc, "types", "$"));
        loadClasses(member(doc, "classes", "$"));
        loadAssocs(member(doc, "assocs", "$"));
        loadMethods(member(doc, "methods", "$"));
        loadOids(member(doc, "oids", "$"));
        loadStates(member(doc, "states", "$"));
        loadTransitions(member(doc, "transitions", "$"));
        loadReachable(member(doc, "reachable", "$"));
        validate();
        return std::move(sys_);
    }

private:
    const json& member(const json& obj, const char* key, const std::string& path) {
        if (!obj.is_object()) fail("FormatError", path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            fail("FormatError", path, std::string("missing key '") + key + "'");
        return *it;
    }

    const json* optMember(const json& obj, const char* key) {
        auto it = obj.find(key);
        return it == obj.end() ? nullptr : &*it;
    }

    void checkKeys(const json& obj, const std::string& path,
                   std::initializer_list<const char*> allowed) {
        if (!obj.is_object()) fail("FormatError", path, "expected an object");
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool known = false;
            for (const char* k : allowed)
                if (it.key() == k) known = true;
            if (!known) {
                if (strict_)
                    fail("FormatError", path, "unknown key '" + it.key() + "'");
                warnings_.push_back(Diagnostic{"FormatError", Severity::Warning,
                                               "unknown key '" + it.key() + "'", path});
            }
        }
    }

    const json& arr(const json& j, const std::string& path) {
        if (!j.is_array()) fail("FormatError", path, "expected an array");
        return j;
    }

    std::string str(const json& j, const std::string& path) {
        if (!j.is_string()) fail("FormatError", path, "expected a string");
        return j.get<std::string>();
    }

    void loadTypes(const json& j) {
        int i = 0;
        for (const auto& t : arr(j, "types")) {
            std::string path = "types[" + std::to_string(i++) + "]";
            checkKeys(t, path, {"name", "carrier"});
            std::string name = str(member(t, "name", path), path + ".name");
            std::vector<Value> carrier;
            int k = 0;
            for (const auto& v : arr(member(t, "carrier", path), path + ".carrier"))
                carrier.push_back(fromJson(v, path + ".carrier[" + std::to_string(k++) + "]"));
            sys_.types[name] = std::move(carrier);
        }
    }

    void loadClasses(const json& j) {
        int i = 0;
        for (const auto& c : arr(j, "classes")) {
            std::string path = "classes[" + std::to_string(i++) + "]";
            checkKeys(c, path, {"name", "attrs", "super"});
            std::string name = str(member(c, "name", path), path + ".name");
            sys_.uclasses.insert(name);
            if (const json* attrs = optMember(c, "attrs")) {
                int k = 0;
                for (const auto& a : arr(*attrs, path + ".attrs")) {
                    std::string apath = path + ".attrs[" + std::to_string(k++) + "]";
                    checkKeys(a, apath, {"name", "type"});
                    sys_.attrsOf[name].insert({str(member(a, "name", apath), apath + ".name"),
                                               str(member(a, "type", apath), apath + ".type")});
                }
            }
            if (const json* super = optMember(c, "super")) {
                int k = 0;
                for (const auto& s : arr(*super, path + ".super"))
                    sys_.sub.insert({name, str(s, path + ".super[" + std::to_string(k++) + "]")});
            }
        }
    }

    void loadAssocs(const json& j) {
        int i = 0;
        for (const auto& a : arr(j, "assocs")) {
            std::string path = "assocs[" + std::to_string(i++) + "]";
            checkKeys(a, path, {"id", "left", "right", "qualifier", "ordered"});
            AssocInfo info;
            std::string id = str(member(a, "id", path), path + ".id");
            info.leftClass = str(member(a, "left", path), path + ".left");
            info.rightClass = str(member(a, "right", path), path + ".right");
            if (const json* q = optMember(a, "qualifier")) {
                std::string qpath = path + ".qualifier";
                checkKeys(*q, qpath, {"kind", "ref"});
                std::string kind = str(member(*q, "kind", qpath), qpath + ".kind");
                if (kind == "none") {
                    info.qualifierKind = QualifierKind::None;
                } else if (kind == "type") {
                    info.qualifierKind = QualifierKind::ByValueType;
                    info.qualifierRef = str(member(*q, "ref", qpath), qpath + ".ref");
                } else if (kind == "attr") {
                    info.qualifierKind = QualifierKind::ByAttr;
                    info.qualifierRef = str(member(*q, "ref", qpath), qpath + ".ref");
                } else {
                    fail("FormatError", qpath + ".kind",
                         "qualifier kind must be 'none', 'type' or 'attr'");
                }
            }
            if (const json* o = optMember(a, "ordered")) {
                std::string ov = str(*o, path + ".ordered");
                if (ov == "none") info.orderedEnd = OrderedEnd::None;
                else if (ov == "left") info.orderedEnd = OrderedEnd::Left;
                else if (ov == "right") info.orderedEnd = OrderedEnd::Right;
                else fail("FormatError", path + ".ordered",
                          "ordered must be 'none', 'left' or 'right'");
            }
            if (sys_.uassocs.count(id))
                fail("InvariantError", path + ".id", "duplicate association id '" + id + "'");
            sys_.uassocs[id] = std::move(info);
        }
    }

    void loadMethods(const json& j) {
        int i = 0;
        for (const auto& m : arr(j, "methods")) {
            std::string path = "methods[" + std::to_string(i++) + "]";
            checkKeys(m, path, {"id", "class", "name", "params", "ret"});
            MethodInfo info;
            std::string id = str(member(m, "id", path), path + ".id");
            info.className = str(member(m, "class", path), path + ".class");
            info.name = str(member(m, "name", path), path + ".name");
            int k = 0;
            for (const auto& p : arr(member(m, "params", path), path + ".params"))
                info.paramTypes.push_back(str(p, path + ".params[" + std::to_string(k++) + "]"));
            info.retType = str(member(m, "ret", path), path + ".ret");
            if (sys_.umeths.count(id))
                fail("InvariantError", path + ".id", "duplicate method id '" + id + "'");
            sys_.umeths[id] = std::move(info);
        }
    }

    void loadOids(const json& j) {
        int i = 0;
        for (const auto& o : arr(j, "oids")) {
            std::string path = "oids[" + std::to_string(i++) + "]";
            checkKeys(o, path, {"id", "class"});
            std::string id = str(member(o, "id", path), path + ".id");
            if (sys_.uoids.count(id))
                fail("InvariantError", path + ".id", "duplicate oid '" + id + "'");
            sys_.uoids[id] = str(member(o, "class", path), path + ".class");
        }
    }

    void loadStates(const json& j) {
        int i = 0;
        for (const auto& s : arr(j, "states")) {
            std::string path = "states[" + std::to_string(i++) + "]";
            checkKeys(s, path, {"id", "live", "attrs", "links", "stacks", "events"});
            SystemState state;
            state.id = str(member(s, "id", path), path + ".id");
            if (const json* live = optMember(s, "live")) {
                int k = 0;
                for (const auto& o : arr(*live, path + ".live"))
                    state.ds.liveOids.insert(str(o, path + ".live[" + std::to_string(k++) + "]"));
            }
            if (const json* attrs = optMember(s, "attrs")) {
                int k = 0;
                for (const auto& a : arr(*attrs, path + ".attrs")) {
                    std::string apath = path + ".attrs[" + std::to_string(k++) + "]";
                    checkKeys(a, apath, {"oid", "attr", "value"});
                    state.ds.attrVal[{str(member(a, "oid", apath), apath + ".oid"),
                                      str(member(a, "attr", apath), apath + ".attr")}] =
                        fromJson(member(a, "value", apath), apath + ".value");
                }
            }
            if (const json* links = optMember(s, "links")) {
                int k = 0;
                for (const auto& l : arr(*links, path + ".links")) {
                    std::string lpath = path + ".links[" + std::to_string(k++) + "]";
                    checkKeys(l, lpath, {"assoc", "from", "to", "qual", "toList"});
                    Link link;
                    std::string assoc = str(member(l, "assoc", lpath), lpath + ".assoc");
                    link.from = str(member(l, "from", lpath), lpath + ".from");
                    if (const json* to = optMember(l, "to"))
                        link.to = str(*to, lpath + ".to");
                    if (const json* q = optMember(l, "qual"))
                        link.qual = fromJson(*q, lpath + ".qual");
                    if (const json* tl = optMember(l, "toList")) {
                        std::vector<Oid> list;
                        int n = 0;
                        for (const auto& o : arr(*tl, lpath + ".toList"))
                            list.push_back(str(o, lpath + ".toList[" + std::to_string(n++) + "]"));
                        link.toList = std::move(list);
                    }
                    if (link.to.has_value() == link.toList.has_value())
                        fail("FormatError", lpath, "exactly one of 'to' / 'toList' required");
                    state.ds.links[assoc].push_back(std::move(link));
                }
            }
            if (const json* stacks = optMember(s, "stacks")) {
                int k = 0;
                for (const auto& f : arr(*stacks, path + ".stacks")) {
                    std::string fpath = path + ".stacks[" + std::to_string(k++) + "]";
                    checkKeys(f, fpath, {"oid", "thread", "depth"});
                    const json& depth = member(f, "depth", fpath);
                    if (!depth.is_number_integer() || depth.get<std::int64_t>() < 0)
                        fail("FormatError", fpath + ".depth", "depth must be a natural number");
                    state.cs.frames[{str(member(f, "oid", fpath), fpath + ".oid"),
                                     str(member(f, "thread", fpath), fpath + ".thread")}] =
                        static_cast<int>(depth.get<std::int64_t>());
                }
            }
            if (const json* events = optMember(s, "events")) {
                int k = 0;
                for (const auto& e : arr(*events, path + ".events")) {
                    std::string epath = path + ".events[" + std::to_string(k++) + "]";
                    checkKeys(e, epath, {"oid", "recv"});
                    const json& recv = member(e, "recv", epath);
                    checkKeys(recv, epath + ".recv", {"sender", "op", "args"});
                    Message msg;
                    msg.sender = str(member(recv, "sender", epath), epath + ".recv.sender");
                    msg.opName = str(member(recv, "op", epath), epath + ".recv.op");
                    if (const json* args = optMember(recv, "args")) {
                        int n = 0;
                        for (const auto& a : arr(*args, epath + ".recv.args"))
                            msg.args.push_back(
                                fromJson(a, epath + ".recv.args[" + std::to_string(n++) + "]"));
                    }
                    state.es.received[str(member(e, "oid", epath), epath + ".oid")]
                        .push_back(std::move(msg));
                }
            }
            for (const auto& prev : sys_.states)
                if (prev.id == state.id)
                    fail("InvariantError", path + ".id", "duplicate state id '" + state.id + "'");
            sys_.states.push_back(std::move(state));
        }
    }

    void loadTransitions(const json& j) {
        int i = 0;
        for (const auto& t : arr(j, "transitions")) {
            std::string path = "transitions[" + std::to_string(i++) + "]";
            checkKeys(t, path, {"from", "to", "in", "out"});
            Transition tr;
            tr.from = str(member(t, "from", path), path + ".from");
            tr.to = str(member(t, "to", path), path + ".to");
            tr.input = fromJson(member(t, "in", path), path + ".in");
            tr.output = fromJson(member(t, "out", path), path + ".out");
            sys_.transitions.push_back(std::move(tr));
        }
    }

    void loadReachable(const json& j) {
        int i = 0;
        for (const auto& r : arr(j, "reachable"))
            sys_.reachable.insert(str(r, "reachable[" + std::to_string(i++) + "]"));
    }

    // Cross-reference and invariant validation, with document paths.
    void validate() {
        for (const auto& [sub, super] : sys_.sub) {
            if (!sys_.uclasses.count(super))
                fail("RefError", "classes", "undeclared superclass '" + super + "' of '" + sub + "'");
        }
        auto closure = sub_star(sys_);
        if (!closure.ok())
            fail("InvariantError", "classes", closure.diags.front().message);
        subStar_ = *closure;

        for (const auto& [name, attrs] : sys_.attrsOf) {
            for (const auto& [an, tn] : attrs) {
                if (!sys_.types.count(tn) && !sys_.uclasses.count(tn))
                    fail("RefError", "classes", "attribute '" + name + "." + an +
                                                    "' references undeclared type '" + tn + "'");
            }
        }
        for (const auto& [id, a] : sys_.uassocs) {
            if (!sys_.uclasses.count(a.leftClass))
                fail("RefError", "assocs", "association '" + id + "' references undeclared class '" +
                                               a.leftClass + "'");
            if (!sys_.uclasses.count(a.rightClass))
                fail("RefError", "assocs", "association '" + id + "' references undeclared class '" +
                                               a.rightClass + "'");
            if (a.qualifierKind == QualifierKind::ByValueType && !sys_.types.count(a.qualifierRef))
                fail("RefError", "assocs", "association '" + id + "' qualifier type '" +
                                               a.qualifierRef + "' is undeclared");
        }
        for (const auto& [id, m] : sys_.umeths) {
            if (!sys_.uclasses.count(m.className))
                fail("RefError", "methods", "method '" + id + "' references undeclared class '" +
                                                m.className + "'");
        }
        for (const auto& [oid, cls] : sys_.uoids) {
            if (!sys_.uclasses.count(cls))
                fail("RefError", "oids", "oid '" + oid + "' references undeclared class '" + cls + "'");
        }
        int si = 0;
        for (const auto& s : sys_.states) {
            std::string path = "states[" + std::to_string(si++) + "]";
            for (const auto& oid : s.ds.liveOids)
                if (!sys_.uoids.count(oid))
                    fail("RefError", path + ".live", "undeclared oid '" + oid + "'");
            for (const auto& [key, value] : s.ds.attrVal) {
                const auto& [oid, attr] = key;
                auto it = sys_.uoids.find(oid);
                if (it == sys_.uoids.end())
                    fail("RefError", path + ".attrs", "undeclared oid '" + oid + "'");
                if (!s.ds.liveOids.count(oid))
                    fail("InvariantError", path + ".attrs",
                         "attribute value for non-live oid '" + oid + "'");
                auto all = sys_.allAttrsOf(it->second);
                bool declared = false;
                for (const auto& [an, tn] : all)
                    if (an == attr) declared = true;
                if (!declared)
                    fail("RefError", path + ".attrs", "oid '" + oid +
                                                          "' has no declared attribute '" + attr + "'");
            }
            for (const auto& oid : s.ds.liveOids) {
                for (const auto& [an, tn] : sys_.allAttrsOf(sys_.uoids.at(oid))) {
                    if (!s.ds.attrVal.count({oid, an}))
                        fail("InvariantError", path + ".attrs",
                             "live oid '" + oid + "' is missing a value for attribute '" + an + "'");
                }
            }
            for (const auto& [assoc, links] : s.ds.links) {
                auto it = sys_.uassocs.find(assoc);
                if (it == sys_.uassocs.end())
                    fail("RefError", path + ".links", "undeclared association '" + assoc + "'");
                const AssocInfo& info = it->second;
                int li = 0;
                for (const auto& l : links) {
                    std::string lpath = path + ".links[" + std::to_string(li++) + "]";
                    if (info.orderedEnd != OrderedEnd::None) {
                        if (!l.toList)
                            fail("InvariantError", lpath,
                                 "ordered association '" + assoc + "' requires list-shaped links");
                    } else if (l.toList) {
                        fail("InvariantError", lpath,
                             "association '" + assoc + "' is not ordered; pair links required");
                    }
                    if (info.qualifierKind == QualifierKind::ByValueType) {
                        if (!l.qual)
                            fail("InvariantError", lpath,
                                 "qualified association '" + assoc + "' requires triple links");
                        const auto& carrier = sys_.types.at(info.qualifierRef);
                        bool inCarrier = false;
                        for (const auto& v : carrier)
                            if (v == *l.qual) inCarrier = true;
                        if (!inCarrier)
                            fail("InvariantError", lpath + ".qual",
                                 "qualifier value outside carrier of '" + info.qualifierRef + "'");
                    } else if (l.qual) {
                        fail("InvariantError", lpath,
                             "association '" + assoc + "' is not type-qualified");
                    }
                    for (const auto& [x, y] : link_pairs(l)) {
                        for (const Oid* o : {&x, &y}) {
                            if (!sys_.uoids.count(*o))
                                fail("RefError", lpath, "undeclared oid '" + *o + "'");
                            if (!s.ds.liveOids.count(*o))
                                fail("InvariantError", lpath,
                                     "link references non-live oid '" + *o + "'");
                        }
                    }
                }
            }
            for (const auto& [key, depth] : s.cs.frames) {
                if (!sys_.uoids.count(key.first))
                    fail("RefError", path + ".stacks", "undeclared oid '" + key.first + "'");
            }
            for (const auto& [oid, msgs] : s.es.received) {
                if (!sys_.uoids.count(oid))
                    fail("RefError", path + ".events", "undeclared oid '" + oid + "'");
                for (const auto& m : msgs)
                    if (!sys_.uoids.count(m.sender))
                        fail("RefError", path + ".events",
                             "undeclared sender oid '" + m.sender + "'");
            }
        }
        for (const auto& t : sys_.transitions) {
            if (!sys_.findState(t.from))
                fail("RefError", "transitions", "undeclared state '" + t.from + "'");
            if (!sys_.findState(t.to))
                fail("RefError", "transitions", "undeclared state '" + t.to + "'");
        }
        for (const auto& r : sys_.reachable)
            if (!sys_.findState(r))
                fail("RefError", "reachable", "undeclared state '" + r + "'");
    }

    bool strict_;
    std::vector<Diagnostic>& warnings_;
    SystemModel sys_;
    std::set<std::pair<ClassName, ClassName>> subStar_;
};

}  // namespace

Result<SystemModel> load_system_model(std::string_view document, bool strict) {
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded()) {
        return Result<SystemModel>::failure(Diagnostic{
            "FormatError", Severity::Error, "document is not valid JSON", "$"});
    }
    std::vector<Diagnostic> warnings;
    try {
        Loader loader(strict, warnings);
        SystemModel sys = loader.run(doc);
        return Result<SystemModel>::success(std::move(sys), std::move(warnings));
    } catch (const LoadFail& f) {
        warnings.push_back(f.diag);
        return Result<SystemModel>::failure(std::move(warnings));
    }
}

std::string save_system_model(const SystemModel& sys) {
    ordered_json doc;
    doc["types"] = ordered_json::array();
    for (const auto& [name, carrier] : sys.types) {
        ordered_json t{{"name", name}};
        ordered_json car = ordered_json::array();
        for (const auto& v : carrier) car.push_back(toJson(v));
        t["carrier"] = std::move(car);
        doc["types"].push_back(std::move(t));
    }
    doc["classes"] = ordered_json::array();
    for (const auto& cls : sys.uclasses) {
        ordered_json c{{"name", cls}};
        ordered_json attrs = ordered_json::array();
        if (auto it = sys.attrsOf.find(cls); it != sys.attrsOf.end())
            for (const auto& [an, tn] : it->second)
                attrs.push_back(ordered_json{{"name", an}, {"type", tn}});
        c["attrs"] = std::move(attrs);
        ordered_json super = ordered_json::array();
        for (const auto& [s, sup] : sys.sub)
            if (s == cls) super.push_back(sup);
        c["super"] = std::move(super);
        doc["classes"].push_back(std::move(c));
    }
    doc["assocs"] = ordered_json::array();
    for (const auto& [id, a] : sys.uassocs) {
        ordered_json q{{"kind", a.qualifierKind == QualifierKind::None ? "none"
                                : a.qualifierKind == QualifierKind::ByValueType ? "type"
                                                                                : "attr"}};
        if (a.qualifierKind != QualifierKind::None) q["ref"] = a.qualifierRef;
        doc["assocs"].push_back(ordered_json{
            {"id", id},
            {"left", a.leftClass},
            {"right", a.rightClass},
            {"qualifier", std::move(q)},
            {"ordered", a.orderedEnd == OrderedEnd::None    ? "none"
                        : a.orderedEnd == OrderedEnd::Left ? "left"
                                                           : "right"}});
    }
    doc["methods"] = ordered_json::array();
    for (const auto& [id, m] : sys.umeths) {
        ordered_json params = ordered_json::array();
        for (const auto& p : m.paramTypes) params.push_back(p);
        doc["methods"].push_back(ordered_json{{"id", id},
                                              {"class", m.className},
                                              {"name", m.name},
                                              {"params", std::move(params)},
                                              {"ret", m.retType}});
    }
    doc["oids"] = ordered_json::array();
    for (const auto& [id, cls] : sys.uoids)
        doc["oids"].push_back(ordered_json{{"id", id}, {"class", cls}});
    doc["states"] = ordered_json::array();
    for (const auto& s : sys.states) {
        ordered_json st{{"id", s.id}};
        ordered_json live = ordered_json::array();
        for (const auto& o : s.ds.liveOids) live.push_back(o);
        st["live"] = std::move(live);
        ordered_json attrs = ordered_json::array();
        for (const auto& [key, value] : s.ds.attrVal)
            attrs.push_back(ordered_json{
                {"oid", key.first}, {"attr", key.second}, {"value", toJson(value)}});
        st["attrs"] = std::move(attrs);
        ordered_json links = ordered_json::array();
        for (const auto& [assoc, ls] : s.ds.links) {
            for (const auto& l : ls) {
                ordered_json lj{{"assoc", assoc}, {"from", l.from}};
                if (l.to) lj["to"] = *l.to;
                if (l.qual) lj["qual"] = toJson(*l.qual);
                if (l.toList) {
                    ordered_json list = ordered_json::array();
                    for (const auto& o : *l.toList) list.push_back(o);
                    lj["toList"] = std::move(list);
                }
                links.push_back(std::move(lj));
            }
        }
        st["links"] = std::move(links);
        ordered_json stacks = ordered_json::array();
        for (const auto& [key, depth] : s.cs.frames)
            stacks.push_back(ordered_json{
                {"oid", key.first}, {"thread", key.second}, {"depth", depth}});
        st["stacks"] = std::move(stacks);
        ordered_json events = ordered_json::array();
        for (const auto& [oid, msgs] : s.es.received) {
            for (const auto& m : msgs) {
                ordered_json args = ordered_json::array();
                for (const auto& a : m.args) args.push_back(toJson(a));
                events.push_back(ordered_json{
                    {"oid", oid},
                    {"recv", ordered_json{{"sender", m.sender},
                                          {"op", m.opName},
                                          {"args", std::move(args)}}}});
            }
        }
        st["events"] = std::move(events);
        doc["states"].push_back(std::move(st));
    }
    doc["transitions"] = ordered_json::array();
    for (const auto& t : sys.transitions)
        doc["transitions"].push_back(ordered_json{{"from", t.from},
                                                  {"to", t.to},
                                                  {"in", toJson(t.input)},
                                                  {"out", toJson(t.output)}});
    doc["reachable"] = ordered_json::array();
    for (const auto& r : sys.reachable) doc["reachable"].push_back(r);
    return doc.dump(2) + "\n";
}

}  // namespace umlp
