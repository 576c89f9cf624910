#pragma once

#include "telwit/qmat.hpp"
#include "telwit/rng.hpp"
#include "telwit/states.hpp"
#include "telwit/mef_oracle.hpp"
#include "telwit/projection.hpp"
#include "telwit/cutting_plane.hpp"
#include "telwit/witness.hpp"
