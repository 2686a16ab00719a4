#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kgtask {

using EntityId = int32_t;
using RelationId = int32_t;

enum class EntityKind : uint8_t { Room = 0, Location, Object, Action, State };
constexpr int kNumKinds = 5;

const char* kind_name(EntityKind k);
std::optional<EntityKind> kind_from_name(const std::string& s);

// The 11 relations of the household knowledge graph, in dataset-table order.
enum RelationType : RelationId {
    HasEffect = 0,
    InverseActionOf,
    InverseStateOf,
    LocInRoom,
    ObjCanBe,
    ObjInLoc,
    ObjInRoom,
    ObjOnLoc,
    ObjUsedTo,
    ObjHasState,
    OperatesOn,
};
constexpr int kNumRelations = 11;

using KindMask = uint8_t;
constexpr KindMask kind_bit(EntityKind k) { return KindMask(1u << static_cast<int>(k)); }

struct RelationSignature {
    KindMask head;
    KindMask tail;
};

const char* relation_name(RelationId r);
std::optional<RelationId> relation_from_name(const std::string& s);
const RelationSignature& relation_signature(RelationId r);
bool kind_allowed(KindMask mask, EntityKind k);

// Immutable after construction. Entity ids are dense [0, size).
class Catalog {
public:
    Catalog() = default;

    EntityId add(const std::string& name, EntityKind kind);

    EntityId id(const std::string& name) const;          // throws if unknown
    std::optional<EntityId> find(const std::string& name) const;
    const std::string& name(EntityId e) const;
    EntityKind kind(EntityId e) const;
    size_t size() const { return names_.size(); }

    const std::vector<EntityId>& of_kind(EntityKind k) const {
        return by_kind_[static_cast<int>(k)];
    }
    size_t count(EntityKind k) const { return by_kind_[static_cast<int>(k)].size(); }

    bool same_shape(const Catalog& other) const;

    void save(const std::string& path) const;
    static Catalog load(const std::string& path);

private:
    std::vector<std::string> names_;
    std::vector<EntityKind> kinds_;
    std::array<std::vector<EntityId>, kNumKinds> by_kind_;
    std::unordered_map<std::string, EntityId> index_;
};

}  // namespace kgtask
