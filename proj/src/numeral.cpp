#include "multrans/numeral.hpp"

#include <sstream>
#include <stdexcept>

namespace multrans {

namespace {

void require_base(nat base) {
    if (base < 2)
        throw std::invalid_argument("numeral base must be at least 2");
}

}  // namespace

DigitString to_digits(nat n, nat base) {
    require_base(base);
    DigitString d{base, {}};
    do {
        d.digits.push_back(n % base);
        n /= base;
    } while (n != 0);
    return d;
}

nat to_nat(const DigitString& d) {
    require_base(d.base);
    if (d.digits.empty())
        throw std::invalid_argument("numeral needs at least one digit");
    nat value = 0;
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
        if (*it >= d.base) {
            std::ostringstream msg;
            msg << "digit " << *it << " out of range for base " << d.base;
            throw std::invalid_argument(msg.str());
        }
        value = checked_add(checked_mul(value, d.base), *it);
    }
    return value;
}

bool is_canonical(const DigitString& d) {
    if (d.base < 2 || d.digits.empty())
        return false;
    for (nat digit : d.digits)
        if (digit >= d.base)
            return false;
    return d.digits.size() == 1 || d.digits.back() != 0;
}

DigitString canonicalized(DigitString d) {
    while (d.digits.size() > 1 && d.digits.back() == 0)
        d.digits.pop_back();
    if (d.digits.empty())
        d.digits.push_back(0);
    return d;
}

DigitString parse_numeral(const std::string& text, nat base) {
    require_base(base);
    if (text.empty())
        throw std::invalid_argument("empty numeral");

    std::vector<nat> big_endian;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string token;
        while (std::getline(in, token, ',')) {
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed numeral digit '" + token + "'");
            try {
                big_endian.push_back(std::stoull(token));
            } catch (const std::out_of_range&) {
                throw std::invalid_argument("numeral digit out of range '" + token + "'");
            }
        }
        if (text.back() == ',')
            throw std::invalid_argument("malformed numeral: trailing comma");
    } else if (base > 10) {
        // Without separators a wide base is ambiguous, so the whole text is
        // one decimal digit value.
        if (text.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed numeral '" + text + "'");
        try {
            big_endian.push_back(std::stoull(text));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("numeral digit out of range '" + text + "'");
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument(std::string("malformed numeral character '") + ch + "'");
            big_endian.push_back(static_cast<nat>(ch - '0'));
        }
    }

    DigitString d{base, {big_endian.rbegin(), big_endian.rend()}};
    for (nat digit : d.digits) {
        if (digit >= base) {
            std::ostringstream msg;
            msg << "digit " << digit << " out of range for base " << base;
            throw std::invalid_argument(msg.str());
        }
    }
    return canonicalized(std::move(d));
}

std::string format_numeral(const DigitString& d) {
    require_base(d.base);
    if (d.digits.empty())
        throw std::invalid_argument("numeral needs at least one digit");
    std::ostringstream out;
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
        if (d.base > 10 && it != d.digits.rbegin())
            out << ',';
        out << *it;
    }
    return out.str();
}

}  // namespace multrans
