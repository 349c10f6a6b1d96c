#pragma once

#include <doctest.h>

#include "tightcat/error.hpp"

// Asserts that expr throws tightcat::Error of the given kind.
#define CHECK_THROWS_KIND(expr, expected)                                  \
    do {                                                                   \
        bool thrown_ = false;                                              \
        try {                                                              \
            (void)(expr);                                                  \
        } catch (const tightcat::Error& e_) {                              \
            thrown_ = true;                                                \
            CHECK(e_.kind() == tightcat::ErrorKind::expected);             \
        }                                                                  \
        CHECK_MESSAGE(thrown_, "expected " #expected);                     \
    } while (0)
