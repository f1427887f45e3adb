#pragma once

#include "qwedge/entanglement.hpp"
#include "qwedge/error.hpp"
#include "qwedge/fermion_map.hpp"
#include "qwedge/linalg.hpp"
#include "qwedge/random.hpp"
#include "qwedge/reductions.hpp"
#include "qwedge/states.hpp"
#include "qwedge/tolerances.hpp"
