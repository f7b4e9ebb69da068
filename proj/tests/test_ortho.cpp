#include <catch2/catch_amalgamated.hpp>
#include "support.hpp"
