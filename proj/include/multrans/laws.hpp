#pragma once

#include <vector>

#include "multrans/traversal.hpp"

namespace multrans {

// Verification verdict for one (b, m) cell of the sweep grid. Two length
// predictions are carried side by side: the floor-log form implied by the
// carry recursion, and the printed root form, which disagrees with
// measurement on some cells and is reported rather than asserted.
struct CellReport {
    nat b = 0;
    nat m = 0;
    nat measured_length = 0;
    std::vector<nat> measured_carries;
    bool conjecture1_match = false;
    bool reads_are_unit = false;
    bool write_value_is_m = false;
    nat log_formula_length = 0;
    bool log_formula_match = false;
    nat printed_formula_length = 0;
    bool printed_formula_match = false;

    bool operator==(const CellReport&) const = default;
};

// The carry recursion c_0 = 0, c_1 = floor(m/b), c_i = floor(c_{i-1}/b),
// emitted through the first return to 0.
std::vector<nat> predicted_carries(const TransducerSpec& spec);

// floor(log_b m) + 2, by repeated integer division.
nat predicted_loop_length(const TransducerSpec& spec);

// floor(m^(1/b)) + 2, by integer root extraction (largest k with k^b <= m).
nat printed_formula_length(const TransducerSpec& spec);

struct MultiplierRange {
    nat lo = 0;
    nat hi = 0;
    nat count = 0;

    bool operator==(const MultiplierRange&) const = default;
};

// Multipliers whose smallest loop has n + 1 carry entries for base b:
// [b^(n-1), b^n - 1], of size b^(n-1) * (b - 1). Defined for n >= 3.
MultiplierRange multiplier_range_for_length(nat b, nat n);

// Runs both loop searches on T_{m,b}, checks them against each other and the
// predictions, and fills every report field.
CellReport check_cell(const TransducerSpec& spec);

// One report per (b, m) in [2, b_max] x [2, m_max], ordered by (b, m). Cells
// are distributed over `workers` threads; output is identical for any count.
std::vector<CellReport> sweep(nat b_max, nat m_max, nat workers);

}  // namespace multrans
