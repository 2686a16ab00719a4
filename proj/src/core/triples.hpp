#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "catalog.hpp"

namespace kgtask {

struct Triple {
    EntityId head;
    RelationId rel;
    EntityId tail;
    int32_t weight = 1;

    bool same_fact(const Triple& o) const {
        return head == o.head && rel == o.rel && tail == o.tail;
    }
};

enum class Split : uint8_t { Train = 0, Valid, Test };
const char* split_name(Split s);
std::optional<Split> split_from_name(const std::string& s);

inline uint64_t triple_key(EntityId h, RelationId r, EntityId t) {
    return (uint64_t(uint32_t(h)) << 36) | (uint64_t(uint32_t(r)) << 32) | uint64_t(uint32_t(t));
}

// Membership and adjacency over a set of facts.
class TripleIndex {
public:
    void insert(const Triple& t);
    bool contains(EntityId h, RelationId r, EntityId t) const {
        return keys_.count(triple_key(h, r, t)) != 0;
    }
    // All tails t with (h, r, t) present; empty vector if none.
    const std::vector<EntityId>& tails(EntityId h, RelationId r) const;
    const std::vector<EntityId>& heads(RelationId r, EntityId t) const;
    size_t size() const { return keys_.size(); }

private:
    std::unordered_set<uint64_t> keys_;
    std::unordered_map<uint64_t, std::vector<EntityId>> by_head_rel_;
    std::unordered_map<uint64_t, std::vector<EntityId>> by_tail_rel_;
};

// Validates one fact against the catalog and relation signature.
void validate_triple(const Catalog& cat, const Triple& t, const std::string& context);

// All true facts of the simulated domain; anything absent is false
// (closed world). Execution plausibility and the solvability oracle
// consult this, never the learned model.
class GroundTruthKG {
public:
    GroundTruthKG() = default;
    GroundTruthKG(Catalog cat, std::vector<Triple> triples);

    const Catalog& catalog() const { return catalog_; }
    const std::vector<Triple>& triples() const { return triples_; }
    const TripleIndex& index() const { return index_; }
    bool contains(EntityId h, RelationId r, EntityId t) const {
        return index_.contains(h, r, t);
    }
    size_t count(RelationId r) const { return per_relation_[r]; }

    void save(const std::string& kg_path) const;
    static GroundTruthKG load(const std::string& kg_path, const Catalog& cat);

private:
    Catalog catalog_;
    std::vector<Triple> triples_;
    TripleIndex index_;
    std::array<size_t, kNumRelations> per_relation_{};
};

// Weighted facts with disjoint train/valid/test splits.
class Dataset {
public:
    Dataset() = default;
    Dataset(Catalog cat, std::vector<Triple> train, std::vector<Triple> valid,
            std::vector<Triple> test);

    const Catalog& catalog() const { return catalog_; }
    const std::vector<Triple>& split(Split s) const;
    const std::vector<Triple>& train() const { return train_; }
    const std::vector<Triple>& valid() const { return valid_; }
    const std::vector<Triple>& test() const { return test_; }

    // Membership across all three splits (known positives).
    const TripleIndex& all() const { return all_; }
    const TripleIndex& train_index() const { return train_index_; }

    size_t count(Split s, RelationId r) const {
        return per_relation_[static_cast<int>(s)][r];
    }

    void save(const std::string& path) const;

private:
    Catalog catalog_;
    std::vector<Triple> train_, valid_, test_;
    TripleIndex all_, train_index_;
    std::array<std::array<size_t, kNumRelations>, 3> per_relation_{};
};

// Parses a five-column TSV (head, relation, tail, weight, split). Rows are
// validated against the catalog; when no catalog is supplied one is built
// from a sibling catalog file path.
Dataset load_triples(const std::string& path, const Catalog& catalog);

struct CorruptResult {
    std::vector<Triple> negatives;  // label y = 0 by construction
    bool exhausted = false;         // fewer than requested could be produced
};

// Filtered negative sampling: each negative replaces head or tail (uniform
// coin) with a same-kind entity and is guaranteed absent from every split.
CorruptResult corrupt(const Triple& positive, const Dataset& data, int n, uint64_t seed);

struct SplitRatios {
    double train = 0.8;
    double valid = 0.1;
    double test = 0.1;
};

// Per-relation stratified split. Valid/test sizes are floor(ratio * n); the
// remainder stays in train. Train triples receive Zipf-distributed integer
// weights scaled so each relation's instance/unique ratio matches the
// observation-frequency profile.
Dataset split_dataset(const GroundTruthKG& kg, const SplitRatios& ratios, uint64_t seed);

// Instance-per-unique-triple ratios used to synthesize train weights.
extern const double kDefaultWeightRatio[kNumRelations];

}  // namespace kgtask
