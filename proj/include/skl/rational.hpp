#pragma once

#include <gmpxx.h>

#include <string>

#include "skl/errors.hpp"

namespace skl {

/// Exact rational number. GMP keeps gcd(|num|, den) = 1 and den > 0
/// after every canonicalize, which all constructors here perform.
using Rat = mpq_class;

/// Parses "p", "-p/q" or "p/q". Throws ConfigError on malformed input.
inline Rat parse_rat(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw ConfigError("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw ConfigError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace skl
