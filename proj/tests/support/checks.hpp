#pragma once

#include <doctest.h>

#include "nfrgauge/error.hpp"

// Asserts that the expression throws nfrgauge::Error with the given kind.
#define CHECK_ERROR_KIND(expr, kind_)                          \
  do {                                                         \
    try {                                                      \
      (void)(expr);                                            \
      FAIL_CHECK("expected an Error, nothing was thrown");     \
    } catch (const nfrgauge::Error& e_) {                      \
      CHECK(e_.kind() == nfrgauge::ErrorKind::kind_);          \
    }                                                          \
  } while (0)
