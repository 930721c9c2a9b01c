#pragma once
// Umbrella header for the whole library (the CLI layer is separate).

#include "golay/analysis.hpp"
#include "golay/code844.hpp"
#include "golay/codec.hpp"
#include "golay/construction.hpp"
#include "golay/gf2.hpp"
