#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "twotype/error.hpp"

// kind of the tt::Error raised by f; a test failure if none is raised
inline tt::ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const tt::Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return tt::ErrorKind::ParseError;
}

#include <ostream>

#include "twotype/cochain.hpp"

namespace tt {
// nonzero entries, for readable assertion output
inline void PrintTo(const Cochain& c, std::ostream* os) {
    *os << "degree " << c.degree() << " {";
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        AbElem v = c.at_index(i);
        if (c.coeff().is_zero(v)) continue;
        *os << " (";
        for (int a : c.args(i)) *os << a << ',';
        *os << ")->";
        for (long long x : v) *os << x << ',';
    }
    *os << " }";
}
} // namespace tt
