#pragma once

#include <optional>
#include <vector>

#include "multrans/traversal.hpp"

namespace multrans {

// Allowed digits for a restricted representation base. Invariants: digits are
// strictly increasing, all below base, 0 is present (runs pad with zero reads
// and writes), and at least one nonzero digit exists.
struct DigitSet {
    nat base = 10;
    std::vector<nat> digits;

    bool operator==(const DigitSet&) const = default;
};

// Sorts and deduplicates, then validates.
DigitSet make_digit_set(nat base, std::vector<nat> digits);
void validate(const DigitSet& ds);
bool contains(const DigitSet& ds, nat digit);

// Decision for one candidate quotient n against S(b; D). When is_member is
// true the witness fields hold a closed carry loop whose reads spell s and
// whose writes spell n * s, both using digits from D only.
struct MembershipResult {
    nat n = 0;
    DigitSet digit_set;
    bool is_member = false;
    std::optional<Loop> witness_loop;
    std::optional<nat> witness_s;
    std::optional<nat> witness_product;
};

// The count smallest positive naturals whose base-b digits all lie in D,
// ascending. Built breadth-wise by digit length.
std::vector<nat> s_members(const DigitSet& ds, nat count);

// Exact decision: n is a quotient of two members of S(b; D) iff the
// multiply-by-n transducer, with every transition reading or writing a digit
// outside D removed, still has a qualifying loop at carry 0.
MembershipResult quotient_member(nat n, const DigitSet& ds);

struct OracleWitness {
    nat s = 0;
    nat product = 0;

    bool operator==(const OracleWitness&) const = default;
};

// Brute force over the definition: smallest s in S(b; D) with 0 < s <= bound
// and n * s in S(b; D). Semi-decisive for negatives; test oracle only.
std::optional<OracleWitness> oracle_member(nat n, const DigitSet& ds, nat bound);

}  // namespace multrans
