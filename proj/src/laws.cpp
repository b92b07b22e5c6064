#include "multrans/laws.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "multrans/checked.hpp"
#include "multrans/numeral.hpp"

namespace multrans {

namespace {

void require_law_spec(const TransducerSpec& spec) {
    validate(spec);
    if (spec.multiplier < 2) {
        std::ostringstream msg;
        msg << "loop laws need multiplier >= 2, got " << spec.multiplier;
        throw std::domain_error(msg.str());
    }
}

// Largest k with k^e <= m, for e >= 1. Overflow-safe: the running product is
// compared against m / k before each multiply.
bool pow_at_most(nat k, nat e, nat m) {
    nat p = 1;
    for (nat i = 0; i < e; ++i) {
        if (p > m / k)
            return false;
        p *= k;
    }
    return p <= m;
}

nat integer_root(nat m, nat e) {
    nat lo = 1;
    nat hi = m;
    while (lo < hi) {
        const nat mid = lo + (hi - lo + 1) / 2;
        if (pow_at_most(mid, e, m))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

std::vector<nat> predicted_carries(const TransducerSpec& spec) {
    require_law_spec(spec);
    std::vector<nat> carries{0};
    nat c = spec.multiplier / spec.base;
    carries.push_back(c);
    while (c != 0) {
        c /= spec.base;
        carries.push_back(c);
    }
    return carries;
}

nat predicted_loop_length(const TransducerSpec& spec) {
    require_law_spec(spec);
    nat k = 0;
    nat v = spec.multiplier;
    while (v >= spec.base) {
        v /= spec.base;
        ++k;
    }
    return k + 2;
}

nat printed_formula_length(const TransducerSpec& spec) {
    require_law_spec(spec);
    return integer_root(spec.multiplier, spec.base) + 2;
}

MultiplierRange multiplier_range_for_length(nat b, nat n) {
    if (b < 2) {
        std::ostringstream msg;
        msg << "base must be at least 2, got " << b;
        throw std::invalid_argument(msg.str());
    }
    if (n < 3) {
        std::ostringstream msg;
        msg << "multiplier ranges are defined for n >= 3, got " << n;
        throw std::domain_error(msg.str());
    }
    MultiplierRange range;
    range.lo = checked_pow(b, n - 1);
    range.hi = checked_add(checked_mul(range.lo, b - 1), range.lo - 1);
    range.count = checked_mul(range.lo, b - 1);
    return range;
}

CellReport check_cell(const TransducerSpec& spec) {
    require_law_spec(spec);
    const Transducer t = build(spec);
    const Loop via_bfs = shortest_zero_loop_bfs(t);
    const Loop via_dfs = shortest_zero_loop_dfs(t);
    if (!(via_bfs == via_dfs)) {
        std::ostringstream msg;
        msg << "loop searches disagree on base " << spec.base
            << " multiplier " << spec.multiplier << ": breadth-first found "
            << via_bfs.length() << " carries, depth-first found "
            << via_dfs.length();
        throw std::logic_error(msg.str());
    }

    const Loop& loop = via_bfs;
    CellReport report;
    report.b = spec.base;
    report.m = spec.multiplier;
    report.measured_length = loop.length();
    report.measured_carries = loop.carries;
    report.conjecture1_match = loop.carries == predicted_carries(spec);

    report.reads_are_unit = !loop.reads.empty() && loop.reads.front() == 1;
    for (std::size_t i = 1; i < loop.reads.size(); ++i) {
        if (loop.reads[i] != 0)
            report.reads_are_unit = false;
    }
    report.write_value_is_m =
        to_nat(DigitString{spec.base, loop.writes}) == spec.multiplier;

    report.log_formula_length = predicted_loop_length(spec);
    report.log_formula_match = report.log_formula_length == report.measured_length;
    report.printed_formula_length = printed_formula_length(spec);
    report.printed_formula_match =
        report.printed_formula_length == report.measured_length;
    return report;
}

std::vector<CellReport> sweep(nat b_max, nat m_max, nat workers) {
    if (b_max < 2 || m_max < 2) {
        std::ostringstream msg;
        msg << "sweep needs b_max and m_max of at least 2, got b_max="
            << b_max << " m_max=" << m_max;
        throw std::invalid_argument(msg.str());
    }
    const nat bases = b_max - 1;
    const nat mults = m_max - 1;
    const nat cells = checked_mul(bases, mults);
    std::vector<CellReport> reports(cells);

    nat thread_count = workers == 0 ? 1 : workers;
    if (thread_count > cells)
        thread_count = cells;

    // Each worker takes a strided slice of the cell index space, so the
    // result vector is filled without coordination and the output never
    // depends on thread_count. The earliest failing cell wins error
    // reporting, again independent of scheduling.
    std::vector<std::exception_ptr> errors(thread_count);
    std::vector<nat> error_cells(thread_count, cells);
    auto work = [&](nat slot) {
        for (nat idx = slot; idx < cells; idx += thread_count) {
            TransducerSpec spec;
            spec.base = 2 + idx / mults;
            spec.multiplier = 2 + idx % mults;
            try {
                reports[idx] = check_cell(spec);
            } catch (...) {
                errors[slot] = std::current_exception();
                error_cells[slot] = idx;
                return;
            }
        }
    };

    if (thread_count == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (nat slot = 0; slot < thread_count; ++slot)
            pool.emplace_back(work, slot);
        for (std::thread& th : pool)
            th.join();
    }

    nat first_slot = thread_count;
    for (nat slot = 0; slot < thread_count; ++slot) {
        if (errors[slot] &&
            (first_slot == thread_count ||
             error_cells[slot] < error_cells[first_slot]))
            first_slot = slot;
    }
    if (first_slot != thread_count)
        std::rethrow_exception(errors[first_slot]);
    return reports;
}

}  // namespace multrans
