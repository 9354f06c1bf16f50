#include <catch2/catch_amalgamated.hpp>
#include "dgvertex/dgvertex.hpp"
