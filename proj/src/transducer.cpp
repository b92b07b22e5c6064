#include "multrans/transducer.hpp"

#include <sstream>
#include <stdexcept>

namespace multrans {

namespace {

// Dense tables above this size are rejected rather than attempted.
constexpr nat kMaxTableEntries = nat(1) << 31;

[[noreturn]] void throw_capacity(const TransducerSpec& spec, const char* what) {
    std::ostringstream msg;
    msg << what << " for (base=" << spec.base << ", multiplier=" << spec.multiplier << ")";
    throw std::overflow_error(msg.str());
}

}  // namespace

void validate(const TransducerSpec& spec) {
    if (spec.base < 2)
        throw std::invalid_argument("transducer base must be at least 2");
    if (spec.multiplier < 1)
        throw std::invalid_argument("transducer multiplier must be at least 1");
    // Largest total is (b-1)*m + (m-1); it must fit in 64 bits.
    try {
        checked_add(checked_mul(spec.base - 1, spec.multiplier), spec.multiplier - 1);
    } catch (const std::overflow_error&) {
        throw_capacity(spec, "step totals overflow 64-bit naturals");
    }
}

StepRecord step(nat carry, nat read, const TransducerSpec& spec) {
    validate(spec);
    if (carry >= spec.multiplier) {
        std::ostringstream msg;
        msg << "carry " << carry << " out of range for multiplier " << spec.multiplier;
        throw std::domain_error(msg.str());
    }
    if (read >= spec.base) {
        std::ostringstream msg;
        msg << "read digit " << read << " out of range for base " << spec.base;
        throw std::domain_error(msg.str());
    }
    const nat total = read * spec.multiplier + carry;  // in range by validate()
    return StepRecord{carry, read, total, total % spec.base, total / spec.base};
}

StepRecord Transducer::transition(nat carry, nat read) const {
    if (carry >= spec_.multiplier) {
        std::ostringstream msg;
        msg << "carry " << carry << " out of range for multiplier " << spec_.multiplier;
        throw std::domain_error(msg.str());
    }
    if (read >= spec_.base) {
        std::ostringstream msg;
        msg << "read digit " << read << " out of range for base " << spec_.base;
        throw std::domain_error(msg.str());
    }
    const Arc& arc = arcs_[carry * spec_.base + read];
    const nat total = read * spec_.multiplier + carry;
    return StepRecord{carry, read, total, arc.write, arc.carry_out};
}

Transducer build(const TransducerSpec& spec) {
    validate(spec);
    const nat m = spec.multiplier;
    const nat b = spec.base;
    nat entries;
    try {
        entries = checked_mul(m, b);
    } catch (const std::overflow_error&) {
        throw_capacity(spec, "transition table size overflows");
    }
    if (entries > kMaxTableEntries)
        throw_capacity(spec, "transition table too large");

    Transducer t;
    t.spec_ = spec;
    t.arcs_.resize(entries);
    std::size_t k = 0;
    for (nat c = 0; c < m; ++c) {
        nat total = c;  // read 0
        for (nat r = 0; r < b; ++r, ++k) {
            t.arcs_[k] = Transducer::Arc{static_cast<std::uint32_t>(total / b),
                             static_cast<std::uint32_t>(total % b)};
            if (r + 1 < b)
                total += m;
        }
    }
    return t;
}

MultiplicationTrace run(const Transducer& t, const DigitString& value) {
    if (value.base != t.spec().base)
        throw std::domain_error("numeral base does not match transducer base");
    if (value.digits.empty())
        throw std::domain_error("numeral needs at least one digit");

    MultiplicationTrace trace;
    trace.spec = t.spec();
    trace.input = value;
    trace.output.base = value.base;

    nat carry = 0;
    for (nat digit : value.digits) {
        StepRecord s = t.transition(carry, digit);
        trace.steps.push_back(s);
        trace.output.digits.push_back(s.write);
        carry = s.carry_out;
    }
    // Zero reads strictly shrink a positive carry, so this terminates.
    while (carry != 0) {
        StepRecord s = t.transition(carry, 0);
        trace.steps.push_back(s);
        trace.output.digits.push_back(s.write);
        carry = s.carry_out;
    }
    return trace;
}

}  // namespace multrans
