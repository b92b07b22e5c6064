#pragma once

#include <string>
#include <vector>

#include "multrans/checked.hpp"

namespace multrans {

// A base-b numeral as an explicit digit sequence, least-significant digit
// first: digits[i] is the coefficient of base^i. Canonical form carries no
// most-significant zero digit; the value zero is the one-digit sequence [0].
struct DigitString {
    nat base = 10;
    std::vector<nat> digits;

    bool operator==(const DigitString&) const = default;
};

DigitString to_digits(nat n, nat base);
nat to_nat(const DigitString& d);

bool is_canonical(const DigitString& d);
DigitString canonicalized(DigitString d);

// Text form used on the command line: most-significant digit first,
// juxtaposed for base <= 10 ("202"), comma-separated otherwise ("15,0,2").
// The comma form is accepted for any base. Leading zero digits are trimmed.
DigitString parse_numeral(const std::string& text, nat base);
std::string format_numeral(const DigitString& d);

}  // namespace multrans
