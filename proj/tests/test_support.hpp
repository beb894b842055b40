#pragma once

#include <doctest.h>

#include "unipart/errors.hpp"

// Asserts that an expression throws Error with a specific code.
#define CHECK_THROWS_AS_CODE(expr, expected)                          \
    do {                                                              \
        bool thrown_ = false;                                         \
        try {                                                         \
            (void)(expr);                                             \
        } catch (const ::unipart::Error& caught_) {                   \
            thrown_ = true;                                           \
            CHECK_EQ(caught_.code(), (expected));                     \
        }                                                             \
        CHECK_MESSAGE(thrown_, "expected a thrown error: " #expected); \
    } while (0)
