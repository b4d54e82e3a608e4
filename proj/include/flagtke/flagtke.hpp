#pragma once

#include "flagtke/catalog.hpp"
#include "flagtke/classes.hpp"
#include "flagtke/flag.hpp"
#include "flagtke/invariants.hpp"
#include "flagtke/rational.hpp"
#include "flagtke/rootsys.hpp"
#include "flagtke/sweep.hpp"
