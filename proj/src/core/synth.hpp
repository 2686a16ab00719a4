#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "triples.hpp"

namespace kgtask {

// Per-relation unique-triple targets for the synthetic ground-truth KG.
// Defaults reproduce the household dataset profile (281 entities, 11
// relations); InverseStateOf is 16 rather than 15 because symmetric pairs
// force an even count.
struct SynthProfile {
    std::array<int, kNumRelations> unique_counts;

    static SynthProfile defaults();
    static SynthProfile from_json(const std::string& json_text);
    std::string to_json() const;
};

// The fixed 281-entity household catalog: 4 rooms, 45 locations,
// 182 objects, 34 actions, 16 states.
Catalog default_catalog();

// Deterministic function of (seed, profile). Guarantees:
//  - symmetric InverseActionOf / InverseStateOf pairs
//  - the cleaning core: every cleaning action keeps its effect and tools
//  - every tool object (ObjUsedTo head) has at least two plausible
//    placements, every other object at least one (when targets permit,
//    otherwise the profile is rejected as infeasible)
GroundTruthKG generate_synthetic_kg(uint64_t seed, const SynthProfile& profile);

inline GroundTruthKG generate_synthetic_kg(uint64_t seed) {
    return generate_synthetic_kg(seed, SynthProfile::defaults());
}

}  // namespace kgtask
