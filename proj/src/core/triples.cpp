#include "triples.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace kgtask {

namespace {
const char* kSplitNames[3] = {"train", "valid", "test"};
const std::vector<EntityId> kEmpty;
}  // namespace

const char* split_name(Split s) { return kSplitNames[static_cast<int>(s)]; }

std::optional<Split> split_from_name(const std::string& s) {
    for (int i = 0; i < 3; ++i)
        if (s == kSplitNames[i]) return static_cast<Split>(i);
    return std::nullopt;
}

namespace {
inline uint64_t pair_key(EntityId e, RelationId r) {
    return (uint64_t(uint32_t(e)) << 32) | uint32_t(r);
}
}  // namespace

void TripleIndex::insert(const Triple& t) {
    keys_.insert(triple_key(t.head, t.rel, t.tail));
    by_head_rel_[pair_key(t.head, t.rel)].push_back(t.tail);
    by_tail_rel_[pair_key(t.tail, t.rel)].push_back(t.head);
}

const std::vector<EntityId>& TripleIndex::tails(EntityId h, RelationId r) const {
    auto it = by_head_rel_.find(pair_key(h, r));
    return it == by_head_rel_.end() ? kEmpty : it->second;
}

const std::vector<EntityId>& TripleIndex::heads(RelationId r, EntityId t) const {
    auto it = by_tail_rel_.find(pair_key(t, r));
    return it == by_tail_rel_.end() ? kEmpty : it->second;
}

void validate_triple(const Catalog& cat, const Triple& t, const std::string& context) {
    require(t.head >= 0 && static_cast<size_t>(t.head) < cat.size(),
            context + ": head id out of range");
    require(t.tail >= 0 && static_cast<size_t>(t.tail) < cat.size(),
            context + ": tail id out of range");
    require(t.rel >= 0 && t.rel < kNumRelations, context + ": bad relation id");
    require(t.weight >= 1, context + ": weight must be >= 1");
    const RelationSignature& sig = relation_signature(t.rel);
    if (!kind_allowed(sig.head, cat.kind(t.head)) ||
        !kind_allowed(sig.tail, cat.kind(t.tail))) {
        fail(ErrorCode::Validation,
             context + ": kind-signature violation for (" + cat.name(t.head) + ", " +
                 relation_name(t.rel) + ", " + cat.name(t.tail) + ")");
    }
}

GroundTruthKG::GroundTruthKG(Catalog cat, std::vector<Triple> triples)
    : catalog_(std::move(cat)), triples_(std::move(triples)) {
    for (const Triple& t : triples_) {
        validate_triple(catalog_, t, "ground-truth kg");
        require(!index_.contains(t.head, t.rel, t.tail),
                "duplicate triple in ground-truth kg: " + catalog_.name(t.head) + " " +
                    relation_name(t.rel) + " " + catalog_.name(t.tail));
        index_.insert(t);
        per_relation_[t.rel]++;
    }
}

void GroundTruthKG::save(const std::string& kg_path) const {
    std::ofstream out(kg_path);
    require(out.good(), "cannot open for write: " + kg_path, ErrorCode::Io);
    out << "# kgtask kg v1\n";
    for (const Triple& t : triples_) {
        out << catalog_.name(t.head) << '\t' << relation_name(t.rel) << '\t'
            << catalog_.name(t.tail) << '\n';
    }
    require(out.good(), "write failed: " + kg_path, ErrorCode::Io);
}

GroundTruthKG GroundTruthKG::load(const std::string& kg_path, const Catalog& cat) {
    std::ifstream in(kg_path);
    require(in.good(), "cannot open: " + kg_path, ErrorCode::Io);
    std::vector<Triple> triples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string h, r, t;
        std::string ctx = kg_path + ":" + std::to_string(lineno);
        if (!std::getline(ss, h, '\t') || !std::getline(ss, r, '\t') ||
            !std::getline(ss, t, '\t')) {
            fail(ErrorCode::Validation, ctx + ": malformed row");
        }
        auto rel = relation_from_name(r);
        require(rel.has_value(), ctx + ": unknown relation name '" + r + "'");
        auto hid = cat.find(h);
        auto tid = cat.find(t);
        require(hid.has_value(), ctx + ": entity not in catalog: " + h);
        require(tid.has_value(), ctx + ": entity not in catalog: " + t);
        triples.push_back({*hid, *rel, *tid, 1});
    }
    return GroundTruthKG(cat, std::move(triples));
}

Dataset::Dataset(Catalog cat, std::vector<Triple> train, std::vector<Triple> valid,
                 std::vector<Triple> test)
    : catalog_(std::move(cat)),
      train_(std::move(train)),
      valid_(std::move(valid)),
      test_(std::move(test)) {
    auto ingest = [this](const std::vector<Triple>& v, Split s) {
        for (const Triple& t : v) {
            validate_triple(catalog_, t, std::string("dataset ") + split_name(s));
            require(!all_.contains(t.head, t.rel, t.tail),
                    "split overlap: (" + catalog_.name(t.head) + ", " +
                        relation_name(t.rel) + ", " + catalog_.name(t.tail) +
                        ") appears in more than one split");
            all_.insert(t);
            per_relation_[static_cast<int>(s)][t.rel]++;
        }
    };
    ingest(train_, Split::Train);
    ingest(valid_, Split::Valid);
    ingest(test_, Split::Test);
    for (const Triple& t : train_) train_index_.insert(t);
}

const std::vector<Triple>& Dataset::split(Split s) const {
    switch (s) {
        case Split::Train: return train_;
        case Split::Valid: return valid_;
        case Split::Test: return test_;
    }
    fail(ErrorCode::Internal, "bad split");
}

void Dataset::save(const std::string& path) const {
    std::ofstream out(path);
    require(out.good(), "cannot open for write: " + path, ErrorCode::Io);
    out << "# kgtask dataset v1\n";
    auto dump = [&](const std::vector<Triple>& v, Split s) {
        for (const Triple& t : v) {
            out << catalog_.name(t.head) << '\t' << relation_name(t.rel) << '\t'
                << catalog_.name(t.tail) << '\t' << t.weight << '\t' << split_name(s)
                << '\n';
        }
    };
    dump(train_, Split::Train);
    dump(valid_, Split::Valid);
    dump(test_, Split::Test);
    require(out.good(), "write failed: " + path, ErrorCode::Io);
}

Dataset load_triples(const std::string& path, const Catalog& catalog) {
    std::ifstream in(path);
    require(in.good(), "cannot open: " + path, ErrorCode::Io);
    std::vector<Triple> train, valid, test;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::string ctx = path + ":" + std::to_string(lineno);
        std::istringstream ss(line);
        std::string h, r, t, w, s;
        if (!std::getline(ss, h, '\t') || !std::getline(ss, r, '\t') ||
            !std::getline(ss, t, '\t') || !std::getline(ss, w, '\t') ||
            !std::getline(ss, s, '\t')) {
            fail(ErrorCode::Validation, ctx + ": malformed row (expected 5 columns)");
        }
        auto rel = relation_from_name(r);
        require(rel.has_value(), ctx + ": unknown relation name '" + r + "'");
        auto hid = catalog.find(h);
        auto tid = catalog.find(t);
        require(hid.has_value(), ctx + ": entity not in catalog: " + h);
        require(tid.has_value(), ctx + ": entity not in catalog: " + t);
        int32_t weight = 0;
        try {
            weight = static_cast<int32_t>(std::stol(w));
        } catch (const std::exception&) {
            fail(ErrorCode::Validation, ctx + ": weight is not an integer: '" + w + "'");
        }
        require(weight >= 1, ctx + ": weight must be >= 1");
        auto sp = split_from_name(s);
        require(sp.has_value(), ctx + ": unknown split '" + s + "'");
        Triple triple{*hid, *rel, *tid, weight};
        validate_triple(catalog, triple, ctx);
        switch (*sp) {
            case Split::Train: train.push_back(triple); break;
            case Split::Valid: valid.push_back(triple); break;
            case Split::Test: test.push_back(triple); break;
        }
    }
    return Dataset(catalog, std::move(train), std::move(valid), std::move(test));
}

CorruptResult corrupt(const Triple& positive, const Dataset& data, int n, uint64_t seed) {
    require(n >= 1, "corrupt: n must be >= 1", ErrorCode::InvalidArgument);
    const Catalog& cat = data.catalog();
    Rng rng = Rng::derive(seed, {0x6e65676174697665ULL});

    CorruptResult out;
    std::unordered_set<uint64_t> picked;
    const int kMaxTries = 64;
    for (int i = 0; i < n; ++i) {
        bool got = false;
        bool corrupt_head_first = rng.coin();
        for (int side = 0; side < 2 && !got; ++side) {
            bool corrupt_head = (side == 0) ? corrupt_head_first : !corrupt_head_first;
            EntityId fixed = corrupt_head ? positive.tail : positive.head;
            EntityId replaced = corrupt_head ? positive.head : positive.tail;
            const std::vector<EntityId>& pool = cat.of_kind(cat.kind(replaced));
            for (int tries = 0; tries < kMaxTries; ++tries) {
                EntityId cand = pool[rng.below(pool.size())];
                if (cand == replaced) continue;
                EntityId h = corrupt_head ? cand : fixed;
                EntityId t = corrupt_head ? fixed : cand;
                if (data.all().contains(h, positive.rel, t)) continue;
                if (picked.count(triple_key(h, positive.rel, t))) continue;
                picked.insert(triple_key(h, positive.rel, t));
                out.negatives.push_back({h, positive.rel, t, 1});
                got = true;
                break;
            }
        }
        if (!got) {
            out.exhausted = true;
            break;
        }
    }
    return out;
}

const double kDefaultWeightRatio[kNumRelations] = {
    39263.0 / 24.0,   // HasEffect
    29956.0 / 10.0,   // InverseActionOf
    23763.0 / 13.0,   // InverseStateOf
    3972.0 / 78.0,    // LocInRoom
    45075.0 / 886.0,  // ObjCanBe
    9461.0 / 409.0,   // ObjInLoc
    8276.0 / 289.0,   // ObjInRoom
    2346.0 / 269.0,   // ObjOnLoc
    6224.0 / 76.0,    // ObjUsedTo
    28306.0 / 431.0,  // ObjHasState
    84286.0 / 1124.0, // OperatesOn
};

Dataset split_dataset(const GroundTruthKG& kg, const SplitRatios& ratios, uint64_t seed) {
    require(ratios.train > 0 && ratios.valid > 0 && ratios.test > 0,
            "each split fraction must be > 0", ErrorCode::InvalidArgument);
    require(std::abs(ratios.train + ratios.valid + ratios.test - 1.0) < 1e-9,
            "split ratios must sum to 1", ErrorCode::InvalidArgument);

    std::array<std::vector<Triple>, kNumRelations> by_rel;
    for (const Triple& t : kg.triples()) by_rel[t.rel].push_back(t);

    std::vector<Triple> train, valid, test;
    for (RelationId r = 0; r < kNumRelations; ++r) {
        std::vector<Triple>& pool = by_rel[r];
        if (pool.empty()) continue;
        size_t n = pool.size();
        size_t n_valid = static_cast<size_t>(std::floor(ratios.valid * double(n)));
        size_t n_test = static_cast<size_t>(std::floor(ratios.test * double(n)));
        if (n_valid == 0 || n_test == 0 || n_valid + n_test >= n) {
            fail(ErrorCode::Infeasible,
                 std::string("relation ") + relation_name(r) + " has too few unique triples (" +
                     std::to_string(n) + ") for the requested split");
        }
        Rng rng = Rng::derive(seed, {0x73706c6974ULL, uint64_t(r)});
        rng.shuffle(pool);

        size_t n_train = n - n_valid - n_test;
        // Zipf(1.0) weights over a random rank permutation, scaled so the
        // instance/unique ratio matches the per-relation frequency profile.
        double harmonic = 0.0;
        for (size_t i = 1; i <= n_train; ++i) harmonic += 1.0 / double(i);
        double total = kDefaultWeightRatio[r] * double(n_train);
        std::vector<size_t> rank(n_train);
        for (size_t i = 0; i < n_train; ++i) rank[i] = i + 1;
        Rng wrng = Rng::derive(seed, {0x7a697066ULL, uint64_t(r)});
        wrng.shuffle(rank);
        for (size_t i = 0; i < n_train; ++i) {
            Triple t = pool[i];
            double w = total / (harmonic * double(rank[i]));
            t.weight = static_cast<int32_t>(std::max(1.0, std::llround(w) * 1.0));
            train.push_back(t);
        }
        for (size_t i = n_train; i < n_train + n_valid; ++i) {
            Triple t = pool[i];
            t.weight = 1;
            valid.push_back(t);
        }
        for (size_t i = n_train + n_valid; i < n; ++i) {
            Triple t = pool[i];
            t.weight = 1;
            test.push_back(t);
        }
    }
    return Dataset(kg.catalog(), std::move(train), std::move(valid), std::move(test));
}

}  // namespace kgtask
