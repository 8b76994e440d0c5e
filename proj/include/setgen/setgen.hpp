#pragma once

#include "setgen/bound.hpp"
#include "setgen/candidate_set.hpp"
#include "setgen/error.hpp"
#include "setgen/gen_model.hpp"
#include "setgen/goal.hpp"
#include "setgen/instance_gen.hpp"
#include "setgen/isip.hpp"
#include "setgen/kswap.hpp"
#include "setgen/omega.hpp"
#include "setgen/oracles.hpp"
#include "setgen/renaming.hpp"
