#pragma once

#include "convpow/calculus.hpp"
#include "convpow/invariants.hpp"
#include "convpow/kernel.hpp"
#include "convpow/oracle.hpp"
#include "convpow/piecewise.hpp"
#include "convpow/plot.hpp"
#include "convpow/poly.hpp"
#include "convpow/rational.hpp"
#include "convpow/serialize.hpp"
#include "convpow/splinespace.hpp"
