#pragma once

#include "bc4/berge.hpp"
#include "bc4/blocks.hpp"
#include "bc4/bounds.hpp"
#include "bc4/census.hpp"
#include "bc4/construct.hpp"
#include "bc4/errors.hpp"
#include "bc4/exact.hpp"
#include "bc4/hypergraph.hpp"
#include "bc4/search.hpp"
