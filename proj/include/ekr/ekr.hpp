#pragma once

#include "ekr/combinatorics.hpp"
#include "ekr/cycle_method.hpp"
#include "ekr/extremal.hpp"
#include "ekr/graph.hpp"
#include "ekr/io.hpp"
#include "ekr/rook.hpp"
