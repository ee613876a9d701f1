#pragma once

#include "quasi/counters.hpp"
#include "quasi/covers.hpp"
#include "quasi/first_ge.hpp"
#include "quasi/fixed_length_seeds.hpp"
#include "quasi/left_seed.hpp"
#include "quasi/periodicity.hpp"
#include "quasi/shortest_seed.hpp"
#include "quasi/suffix_array.hpp"
#include "quasi/suffix_tree.hpp"
#include "quasi/types.hpp"
