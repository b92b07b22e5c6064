#include <limits>
#include <optional>

#include "multrans/traversal.hpp"

// Depth-first variant: bounded backtracking over simple carry paths out of
// state 0, keeping the best candidate seen so far. A path is cut as soon as
// it can no longer beat or tie the incumbent. States are explored in
// increasing carry order, which reaches the floor-division walk first and
// makes the length bound tight almost immediately.

namespace multrans {

namespace {

struct DepthFirstSearch {
    const Transducer& t;
    nat base;
    std::vector<char> on_path;
    Loop path;
    std::optional<Loop> best;

    explicit DepthFirstSearch(const Transducer& transducer)
        : t(transducer), base(transducer.spec().base), on_path(transducer.states(), 0) {
        path.carries.push_back(0);
    }

    bool can_close(nat steps_taken) const {
        return !best || steps_taken + 1 <= best->reads.size();
    }

    bool can_extend(nat steps_taken) const {
        return !best || steps_taken + 2 <= best->reads.size();
    }

    void offer_candidate() {
        if (!best || loop_less(path, *best))
            best = path;
    }

    void explore(nat state) {
        const nat steps_taken = static_cast<nat>(path.reads.size());
        nat prev_head = std::numeric_limits<nat>::max();
        for (nat r = (steps_taken == 0 ? 1 : 0); r < base; ++r) {
            const StepRecord s = t.transition(state, r);
            if (s.carry_out == prev_head)
                continue;  // heads are nondecreasing in r; keep the least read
            prev_head = s.carry_out;
            if (s.carry_out == 0) {
                if (!can_close(steps_taken))
                    continue;
                path.carries.push_back(0);
                path.reads.push_back(r);
                path.writes.push_back(s.write);
                offer_candidate();
                path.carries.pop_back();
                path.reads.pop_back();
                path.writes.pop_back();
            } else if (can_extend(steps_taken) && !on_path[s.carry_out]) {
                on_path[s.carry_out] = 1;
                path.carries.push_back(s.carry_out);
                path.reads.push_back(r);
                path.writes.push_back(s.write);
                explore(s.carry_out);
                path.carries.pop_back();
                path.reads.pop_back();
                path.writes.pop_back();
                on_path[s.carry_out] = 0;
            }
        }
    }
};

}  // namespace

Loop shortest_zero_loop_dfs(const Transducer& t) {
    DepthFirstSearch search(t);
    search.explore(0);
    // A qualifying loop always exists: reading 1 from state 0 drains home.
    return *search.best;
}

}  // namespace multrans
