#pragma once

#include <cstdint>
#include <vector>

#include "multrans/numeral.hpp"

namespace multrans {

// Parameters of the multiplication transducer T_{m,b}.
// The loop-law machinery assumes multiplier >= 2; the transducer itself is
// well-formed for multiplier >= 1 (quotient decisions need T_{1,b}).
struct TransducerSpec {
    nat base = 10;        // b
    nat multiplier = 2;   // m

    bool operator==(const TransducerSpec&) const = default;
};

void validate(const TransducerSpec& spec);

// One digit-step of multiplying by m in base b:
//   total = read * m + carry_in = base * carry_out + write
struct StepRecord {
    nat carry_in = 0;
    nat read = 0;
    nat total = 0;
    nat write = 0;
    nat carry_out = 0;

    bool operator==(const StepRecord&) const = default;
};

StepRecord step(nat carry, nat read, const TransducerSpec& spec);

// The complete labeled digraph T_{m,b}: carry states 0..m-1 and one
// transition per (carry, read) pair, m*b in all. Immutable after build;
// safe to share read-only across workers.
class Transducer {
public:
    const TransducerSpec& spec() const { return spec_; }
    nat states() const { return spec_.multiplier; }
    nat transition_count() const { return static_cast<nat>(arcs_.size()); }

    StepRecord transition(nat carry, nat read) const;

    friend Transducer build(const TransducerSpec& spec);

private:
    struct Arc {
        std::uint32_t carry_out;
        std::uint32_t write;
    };

    TransducerSpec spec_;
    std::vector<Arc> arcs_;  // indexed carry * base + read
};

Transducer build(const TransducerSpec& spec);

struct MultiplicationTrace {
    TransducerSpec spec;
    DigitString input;
    std::vector<StepRecord> steps;
    DigitString output;
};

// Consumes the input least-significant digit first, then pads reads with 0
// until the carry drains back to 0. Output digits are the per-step writes.
MultiplicationTrace run(const Transducer& t, const DigitString& value);

}  // namespace multrans
