#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tav/finite_group.hpp"

namespace tav {

inline constexpr size_t kDefaultWitnessBound = 200;

struct PGroupResult {
    bool yes = false;
    uint64_t prime = 0; // 0 for the trivial group
};

PGroupResult is_p_group(uint64_t order);

enum class WitnessCase { CyclicPQ, NonabelianPnQ };
const char* witness_case_name(WitnessCase c);

struct WitnessSubgroup {
    std::vector<size_t> elements;
    size_t gen_a = 0, gen_b = 0;
    WitnessCase tag = WitnessCase::CyclicPQ;
};

// smallest-order subgroup of H (sorted element list of a subgroup of g)
// whose order is not a prime power; ties broken by generator pair
WitnessSubgroup minimal_nonprimepower_subgroup(const FiniteGroup& g, const std::vector<size_t>& h);

inline constexpr const char* kReasonNotNormallyGenerated = "not normally generated by a single element";
inline constexpr const char* kReasonPGroup = "commutator is a p-group";

struct TavVerdict {
    bool normally_single_generated = false;
    std::optional<size_t> normal_generator;
    size_t commutator_order = 1;
    bool commutator_is_p_group = true;
    uint64_t commutator_prime = 0;
    bool is_tav = false;
    std::optional<WitnessSubgroup> witness;
    bool witness_skipped = false; // commutator larger than the witness bound
    std::vector<std::string> reasons;
};

TavVerdict classify_tav(const FiniteGroup& g, size_t witness_bound = kDefaultWitnessBound);

} // namespace tav
