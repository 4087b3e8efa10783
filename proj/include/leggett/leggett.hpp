// leggett.hpp
// Umbrella header.

#pragma once

#include "leggett/canonical.hpp"
#include "leggett/hvt.hpp"
#include "leggett/inequality.hpp"
#include "leggett/io.hpp"
#include "leggett/qcore.hpp"
#include "leggett/rng.hpp"
#include "leggett/verify.hpp"
