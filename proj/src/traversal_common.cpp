#include <algorithm>

#include "multrans/traversal.hpp"

namespace multrans {

bool loop_less(const Loop& a, const Loop& b) {
    if (a.carries.size() != b.carries.size())
        return a.carries.size() < b.carries.size();
    if (a.carries != b.carries)
        return a.carries < b.carries;
    return a.reads < b.reads;
}

bool loop_valid(const Transducer& t, const Loop& loop) {
    const std::size_t steps = loop.reads.size();
    if (loop.carries.size() != steps + 1 || loop.writes.size() != steps || steps == 0)
        return false;
    if (loop.carries.front() != 0 || loop.carries.back() != 0)
        return false;

    bool nonzero_read = false;
    for (std::size_t i = 0; i < steps; ++i) {
        if (loop.carries[i] >= t.states() || loop.reads[i] >= t.spec().base)
            return false;
        const StepRecord s = t.transition(loop.carries[i], loop.reads[i]);
        if (s.carry_out != loop.carries[i + 1] || s.write != loop.writes[i])
            return false;
        nonzero_read |= loop.reads[i] != 0;
    }
    if (!nonzero_read)
        return false;

    std::vector<nat> interior(loop.carries.begin() + 1, loop.carries.end() - 1);
    std::sort(interior.begin(), interior.end());
    if (std::adjacent_find(interior.begin(), interior.end()) != interior.end())
        return false;
    return std::find(interior.begin(), interior.end(), nat(0)) == interior.end();
}

std::vector<Loop> enumerate_zero_loops(const Transducer& t, nat max_steps) {
    std::vector<Loop> loops;
    for_each_zero_loop(t, max_steps, [&](const Loop& loop) { loops.push_back(loop); });
    std::sort(loops.begin(), loops.end(), loop_less);
    return loops;
}

}  // namespace multrans
