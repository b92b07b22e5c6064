#pragma once

#include <vector>

#include "multrans/transducer.hpp"

namespace multrans {

// A closed carry walk through state 0 with its read and write words.
// carries[0] = carries.back() = 0; interior carries are pairwise distinct
// and nonzero; the read word contains at least one nonzero digit, which
// rules out the trivial all-zero self-loop at 0.
struct Loop {
    std::vector<nat> carries;  // length = steps + 1
    std::vector<nat> reads;    // one digit per step, little-endian
    std::vector<nat> writes;

    nat length() const { return static_cast<nat>(carries.size()); }
    bool operator==(const Loop&) const = default;
};

// Ordering used for minimality and tie-breaking: fewest carry entries first,
// then lexicographically smallest carry sequence, then smallest read word.
bool loop_less(const Loop& a, const Loop& b);

// Replays the loop through t from carry 0 and checks every invariant above.
bool loop_valid(const Transducer& t, const Loop& loop);

// The smallest qualifying loop, computed two independent ways. Both searches
// apply the same tie-breaking and must agree on every transducer.
Loop shortest_zero_loop_bfs(const Transducer& t);
Loop shortest_zero_loop_dfs(const Transducer& t);

// Exhaustive backtracking over every qualifying loop with at most max_steps
// steps. The visited reference is reused between calls; copy it to keep it.
template <class Visit>
void for_each_zero_loop(const Transducer& t, nat max_steps, Visit&& visit) {
    const nat b = t.spec().base;
    const nat m = t.spec().multiplier;
    if (max_steps == 0)
        return;

    Loop cur;
    cur.carries.push_back(0);
    std::vector<char> on_path(m, 0);

    auto descend = [&](auto&& self, nat state) -> void {
        const nat steps_taken = static_cast<nat>(cur.reads.size());
        const nat first_read = steps_taken == 0 ? 1 : 0;
        for (nat r = first_read; r < b; ++r) {
            const StepRecord s = t.transition(state, r);
            if (s.carry_out == 0) {
                cur.carries.push_back(0);
                cur.reads.push_back(r);
                cur.writes.push_back(s.write);
                visit(const_cast<const Loop&>(cur));
                cur.carries.pop_back();
                cur.reads.pop_back();
                cur.writes.pop_back();
            } else if (steps_taken + 1 < max_steps && !on_path[s.carry_out]) {
                on_path[s.carry_out] = 1;
                cur.carries.push_back(s.carry_out);
                cur.reads.push_back(r);
                cur.writes.push_back(s.write);
                self(self, s.carry_out);
                cur.carries.pop_back();
                cur.reads.pop_back();
                cur.writes.pop_back();
                on_path[s.carry_out] = 0;
            }
        }
    };
    descend(descend, 0);
}

// All qualifying loops with at most max_steps steps, sorted by loop_less.
// Materializes the full list; intended for small transducers.
std::vector<Loop> enumerate_zero_loops(const Transducer& t, nat max_steps);

}  // namespace multrans
