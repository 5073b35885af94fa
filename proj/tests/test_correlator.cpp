#include "doctest.h"
TEST_CASE("placeholder correlator") { CHECK(true); }
