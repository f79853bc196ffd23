#pragma once

#include <gmpxx.h>

#include <string>

#include "treekkm/errors.hpp"

namespace treekkm {

using Rat = mpq_class;

/// Parses "p/q" or a bare integer "p". Throws ParseError on anything else,
/// including a zero denominator. The result is canonicalized.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

/// Canonical decimal form, "p/q" with q omitted when it is 1.
inline std::string rational_str(const Rat& q) { return q.get_str(); }

}  // namespace treekkm
