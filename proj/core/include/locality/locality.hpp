#pragma once

#include "locality/cache_model.hpp"
#include "locality/footprint.hpp"
#include "locality/formats.hpp"
#include "locality/histogram.hpp"
#include "locality/reconstruct.hpp"
#include "locality/reuse.hpp"
#include "locality/steady_state.hpp"
#include "locality/trace.hpp"
#include "locality/types.hpp"
