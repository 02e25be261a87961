#pragma once
#include "umlab/error.hpp"

// Asserts that the expression throws umlab::Error with the given code.
#define CHECK_ERR(expr, want)                          \
    do {                                               \
        bool threw_ = false;                           \
        try {                                          \
            (void)(expr);                              \
        } catch (const umlab::Error& e_) {             \
            threw_ = true;                             \
            CHECK(e_.code == (want));                  \
        }                                              \
        CHECK(threw_);                                 \
    } while (0)
