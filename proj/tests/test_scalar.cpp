#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rmx/scalar.hpp"
#include "rmx/ratfunc.hpp"
#include "rmx/linalg.hpp"
#include "rmx/numeric.hpp"
#include "rmx/poly2.hpp"

using namespace rmx;

TEST_CASE("smoke") {
  Scalar two = s_qnum(2);
  CHECK(two.str() == "q^1 + q^-1");
}
