#include "multrans/quotient.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "multrans/checked.hpp"
#include "multrans/numeral.hpp"

namespace multrans {

namespace {

constexpr nat kUnreached = std::numeric_limits<nat>::max();

bool all_digits_in(nat value, const DigitSet& ds) {
    for (nat d : to_digits(value, ds.base).digits) {
        if (!contains(ds, d))
            return false;
    }
    return true;
}

// Values of the next digit length: every current value shifted once, with
// every allowed digit appended. Ascending input and ascending digits give
// ascending output.
std::vector<nat> next_length_members(const std::vector<nat>& cur,
                                     const DigitSet& ds) {
    std::vector<nat> next;
    next.reserve(cur.size() * ds.digits.size());
    for (nat v : cur) {
        const nat shifted = checked_mul(v, ds.base);
        for (nat d : ds.digits)
            next.push_back(checked_add(shifted, d));
    }
    return next;
}

std::vector<nat> single_digit_members(const DigitSet& ds) {
    std::vector<nat> first(ds.digits.begin() + 1, ds.digits.end());
    return first;
}

}  // namespace

DigitSet make_digit_set(nat base, std::vector<nat> digits) {
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    DigitSet ds;
    ds.base = base;
    ds.digits = std::move(digits);
    validate(ds);
    return ds;
}

void validate(const DigitSet& ds) {
    if (ds.base < 2) {
        std::ostringstream msg;
        msg << "digit set base must be at least 2, got " << ds.base;
        throw std::invalid_argument(msg.str());
    }
    if (ds.digits.empty() || ds.digits.front() != 0)
        throw std::invalid_argument("digit set must contain 0");
    if (ds.digits.size() < 2)
        throw std::invalid_argument("digit set needs a nonzero digit");
    for (std::size_t i = 0; i < ds.digits.size(); ++i) {
        if (ds.digits[i] >= ds.base) {
            std::ostringstream msg;
            msg << "digit " << ds.digits[i] << " is not below base " << ds.base;
            throw std::invalid_argument(msg.str());
        }
        if (i > 0 && ds.digits[i] <= ds.digits[i - 1])
            throw std::invalid_argument("digit set must be strictly increasing");
    }
}

bool contains(const DigitSet& ds, nat digit) {
    return std::binary_search(ds.digits.begin(), ds.digits.end(), digit);
}

std::vector<nat> s_members(const DigitSet& ds, nat count) {
    validate(ds);
    if (count < 1)
        throw std::invalid_argument("member count must be at least 1");

    std::vector<nat> members;
    members.reserve(count);
    std::vector<nat> level = single_digit_members(ds);
    while (true) {
        for (nat v : level) {
            members.push_back(v);
            if (members.size() == count)
                return members;
        }
        level = next_length_members(level, ds);
    }
}

MembershipResult quotient_member(nat n, const DigitSet& ds) {
    validate(ds);
    if (n == 0)
        throw std::domain_error("quotient candidates start at 1");

    MembershipResult result;
    result.n = n;
    result.digit_set = ds;

    TransducerSpec spec;
    spec.base = ds.base;
    spec.multiplier = n;
    const Transducer t = build(spec);

    // Distance to carry 0 in the digit-restricted graph, by reverse
    // breadth-first search over transitions whose read and write are both
    // allowed.
    std::vector<std::vector<nat>> rev(n);
    for (nat c = 0; c < n; ++c) {
        nat prev_head = kUnreached;
        for (nat r : ds.digits) {
            const StepRecord s = t.transition(c, r);
            if (!contains(ds, s.write))
                continue;
            if (s.carry_out != prev_head) {
                rev[s.carry_out].push_back(c);
                prev_head = s.carry_out;
            }
        }
    }
    std::vector<nat> dist(n, kUnreached);
    dist[0] = 0;
    std::queue<nat> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        const nat v = frontier.front();
        frontier.pop();
        for (nat u : rev[v]) {
            if (dist[u] == kUnreached) {
                dist[u] = dist[v] + 1;
                frontier.push(u);
            }
        }
    }

    // Shortest qualifying loop: a first edge with nonzero read, then a
    // shortest allowed path from its head back to 0.
    nat best_steps = kUnreached;
    nat best_head = kUnreached;
    for (nat r : ds.digits) {
        if (r == 0)
            continue;
        const StepRecord s = t.transition(0, r);
        if (!contains(ds, s.write))
            continue;
        nat steps = kUnreached;
        if (s.carry_out == 0)
            steps = 1;
        else if (dist[s.carry_out] != kUnreached)
            steps = 1 + dist[s.carry_out];
        if (steps < best_steps ||
            (steps == best_steps && s.carry_out < best_head)) {
            best_steps = steps;
            best_head = s.carry_out;
        }
    }
    if (best_steps == kUnreached)
        return result;

    // Rebuild the loop greedily: at each step the smallest head consistent
    // with the remaining distance, reached by its smallest allowed read.
    // Heads never decrease as the read grows, so the first fit is minimal
    // in both coordinates.
    Loop loop;
    loop.carries.push_back(0);
    nat state = 0;
    for (nat remaining = best_steps; remaining > 0; --remaining) {
        for (nat r : ds.digits) {
            if (loop.reads.empty() && r == 0)
                continue;
            const StepRecord s = t.transition(state, r);
            if (!contains(ds, s.write))
                continue;
            const bool fits = remaining == 1
                                  ? s.carry_out == 0
                                  : s.carry_out != 0 &&
                                        dist[s.carry_out] == remaining - 1;
            if (fits) {
                loop.carries.push_back(s.carry_out);
                loop.reads.push_back(r);
                loop.writes.push_back(s.write);
                state = s.carry_out;
                break;
            }
        }
    }

    const nat s_value = to_nat(DigitString{ds.base, loop.reads});
    const nat product = to_nat(DigitString{ds.base, loop.writes});
    if (product != checked_mul(n, s_value)) {
        std::ostringstream msg;
        msg << "witness replay mismatch for n=" << n << ": reads spell "
            << s_value << " but writes spell " << product;
        throw std::logic_error(msg.str());
    }

    result.is_member = true;
    result.witness_loop = std::move(loop);
    result.witness_s = s_value;
    result.witness_product = product;
    return result;
}

std::optional<OracleWitness> oracle_member(nat n, const DigitSet& ds,
                                           nat bound) {
    validate(ds);
    if (n == 0)
        throw std::domain_error("quotient candidates start at 1");
    if (bound < 1)
        throw std::invalid_argument("search bound must be at least 1");

    std::vector<nat> level = single_digit_members(ds);
    while (!level.empty()) {
        std::vector<nat> kept;
        kept.reserve(level.size());
        for (nat v : level) {
            if (v > bound)
                break;
            const nat product = checked_mul(n, v);
            if (all_digits_in(product, ds))
                return OracleWitness{v, product};
            kept.push_back(v);
        }
        if (kept.empty())
            break;
        level = next_length_members(kept, ds);
    }
    return std::nullopt;
}

}  // namespace multrans
