#include "catalog.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace kgtask {

namespace {

const char* kKindNames[kNumKinds] = {"Room", "Location", "Object", "Action", "State"};

const char* kRelationNames[kNumRelations] = {
    "HasEffect",   "InverseActionOf", "InverseStateOf", "LocInRoom",
    "ObjCanBe",    "ObjInLoc",        "ObjInRoom",      "ObjOnLoc",
    "ObjUsedTo",   "ObjHasState",     "OperatesOn",
};

constexpr KindMask kRoom = kind_bit(EntityKind::Room);
constexpr KindMask kLoc = kind_bit(EntityKind::Location);
constexpr KindMask kObj = kind_bit(EntityKind::Object);
constexpr KindMask kAct = kind_bit(EntityKind::Action);
constexpr KindMask kSta = kind_bit(EntityKind::State);

// Head/tail kind constraints per relation. OperatesOn tails and ObjCanBe
// heads cover both objects and locations (things a tool works on / things an
// action can be applied to include surfaces like tables).
const RelationSignature kSignatures[kNumRelations] = {
    {kAct, kSta},         // HasEffect
    {kAct, kAct},         // InverseActionOf
    {kSta, kSta},         // InverseStateOf
    {kLoc, kRoom},        // LocInRoom
    {KindMask(kObj | kLoc), kAct},  // ObjCanBe
    {kObj, kLoc},         // ObjInLoc
    {kObj, kRoom},        // ObjInRoom
    {kObj, kLoc},         // ObjOnLoc
    {kObj, kAct},         // ObjUsedTo
    {kObj, kSta},         // ObjHasState
    {kObj, KindMask(kObj | kLoc)},  // OperatesOn
};

}  // namespace

const char* kind_name(EntityKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<EntityKind> kind_from_name(const std::string& s) {
    for (int i = 0; i < kNumKinds; ++i)
        if (s == kKindNames[i]) return static_cast<EntityKind>(i);
    return std::nullopt;
}

const char* relation_name(RelationId r) {
    require(r >= 0 && r < kNumRelations, "relation id out of range");
    return kRelationNames[r];
}

std::optional<RelationId> relation_from_name(const std::string& s) {
    for (RelationId i = 0; i < kNumRelations; ++i)
        if (s == kRelationNames[i]) return i;
    return std::nullopt;
}

const RelationSignature& relation_signature(RelationId r) {
    require(r >= 0 && r < kNumRelations, "relation id out of range");
    return kSignatures[r];
}

bool kind_allowed(KindMask mask, EntityKind k) { return (mask & kind_bit(k)) != 0; }

EntityId Catalog::add(const std::string& name, EntityKind kind) {
    require(!name.empty(), "entity name must be non-empty");
    require(index_.find(name) == index_.end(), "duplicate entity name: " + name);
    EntityId e = static_cast<EntityId>(names_.size());
    names_.push_back(name);
    kinds_.push_back(kind);
    by_kind_[static_cast<int>(kind)].push_back(e);
    index_.emplace(name, e);
    return e;
}

EntityId Catalog::id(const std::string& name) const {
    auto it = index_.find(name);
    require(it != index_.end(), "unknown entity: " + name);
    return it->second;
}

std::optional<EntityId> Catalog::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& Catalog::name(EntityId e) const {
    require(e >= 0 && static_cast<size_t>(e) < names_.size(), "entity id out of range");
    return names_[e];
}

EntityKind Catalog::kind(EntityId e) const {
    require(e >= 0 && static_cast<size_t>(e) < kinds_.size(), "entity id out of range");
    return kinds_[e];
}

bool Catalog::same_shape(const Catalog& other) const {
    return names_ == other.names_ && kinds_ == other.kinds_;
}

void Catalog::save(const std::string& path) const {
    std::ofstream out(path);
    require(out.good(), "cannot open for write: " + path, ErrorCode::Io);
    out << "# kgtask catalog v1\n";
    for (size_t i = 0; i < names_.size(); ++i)
        out << names_[i] << '\t' << kind_name(kinds_[i]) << '\n';
    require(out.good(), "write failed: " + path, ErrorCode::Io);
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open: " + path, ErrorCode::Io);
    Catalog c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string name, kind;
        if (!std::getline(ss, name, '\t') || !std::getline(ss, kind, '\t')) {
            fail(ErrorCode::Validation,
                 path + ":" + std::to_string(lineno) + ": malformed catalog row");
        }
        auto k = kind_from_name(kind);
        require(k.has_value(),
                path + ":" + std::to_string(lineno) + ": unknown kind '" + kind + "'");
        c.add(name, *k);
    }
    return c;
}

}  // namespace kgtask
