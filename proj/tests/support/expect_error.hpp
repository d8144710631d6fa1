#pragma once

#include <doctest.h>

#include "evident/error.hpp"

namespace evident::testing {

// Runs fn and returns the code of the evident::Error it throws.
inline ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an evident::Error");
    return ErrorCode::Io;
}

}  // namespace evident::testing
