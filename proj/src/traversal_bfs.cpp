#include <limits>
#include <queue>

#include "multrans/traversal.hpp"

// Breadth-first variant: one reverse BFS from state 0 yields, for every
// state, the fewest steps needed to drain back to 0. The loop is then the
// best nonzero-read edge out of 0 plus a shortest walk home, reconstructed
// greedily so the carry sequence and read word are lexicographically
// smallest among minimum-length loops. On a shortest walk every hop lowers
// the remaining distance by exactly one, so the greedy choice is safe.

namespace multrans {

Loop shortest_zero_loop_bfs(const Transducer& t) {
    const nat m = t.states();
    const nat b = t.spec().base;
    constexpr nat kUnreached = std::numeric_limits<nat>::max();

    // rev[h] lists the states with an edge into h (parallel edges collapse).
    std::vector<std::vector<nat>> rev(m);
    for (nat c = 0; c < m; ++c) {
        nat prev_head = kUnreached;
        for (nat r = 0; r < b; ++r) {
            const nat head = t.transition(c, r).carry_out;
            if (head != prev_head)  // heads are nondecreasing in r
                rev[head].push_back(c);
            prev_head = head;
        }
    }

    std::vector<nat> dist(m, kUnreached);
    dist[0] = 0;
    std::queue<nat> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        const nat u = frontier.front();
        frontier.pop();
        for (nat c : rev[u]) {
            if (dist[c] == kUnreached) {
                dist[c] = dist[u] + 1;
                frontier.push(c);
            }
        }
    }

    // Every state drains to 0 under zero reads, so all distances are finite.
    nat best_steps = kUnreached;
    nat best_head = kUnreached;
    for (nat r = 1; r < b; ++r) {
        const nat head = t.transition(0, r).carry_out;
        const nat steps = 1 + dist[head];
        if (steps < best_steps || (steps == best_steps && head < best_head)) {
            best_steps = steps;
            best_head = head;
        }
    }

    Loop loop;
    loop.carries.push_back(0);
    loop.carries.push_back(best_head);
    nat u = best_head;
    for (nat remaining = best_steps - 1; remaining > 0; --remaining) {
        nat next = kUnreached;
        for (nat r = 0; r < b; ++r) {
            const nat head = t.transition(u, r).carry_out;
            if (dist[head] == remaining - 1 && head < next)
                next = head;
        }
        loop.carries.push_back(next);
        u = next;
    }

    // Smallest read realizing each hop; the first read must be nonzero.
    for (std::size_t i = 0; i + 1 < loop.carries.size(); ++i) {
        const nat from = loop.carries[i];
        const nat to = loop.carries[i + 1];
        for (nat r = (i == 0 ? 1 : 0); r < b; ++r) {
            const StepRecord s = t.transition(from, r);
            if (s.carry_out == to) {
                loop.reads.push_back(r);
                loop.writes.push_back(s.write);
                break;
            }
        }
    }
    return loop;
}

}  // namespace multrans
