#pragma once

#include <doctest.h>

#include "hcl/error.hpp"

#define CHECK_ERROR_KIND(expr, expected)                   \
  do {                                                     \
    bool thrown_ = false;                                  \
    try {                                                  \
      (void)(expr);                                        \
    } catch (const hcl::Error& e_) {                       \
      thrown_ = true;                                      \
      CHECK_MESSAGE(e_.kind() == (expected), e_.what());   \
    }                                                      \
    CHECK_MESSAGE(thrown_, "expected an hcl::Error");      \
  } while (false)
