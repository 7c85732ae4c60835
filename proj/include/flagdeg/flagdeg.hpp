#pragma once

// Umbrella header.

#include "flagdeg/bruhat.hpp"
#include "flagdeg/cascade.hpp"
#include "flagdeg/construct.hpp"
#include "flagdeg/deodhar.hpp"
#include "flagdeg/enumerate.hpp"
#include "flagdeg/errors.hpp"
#include "flagdeg/gcr.hpp"
#include "flagdeg/parabolic.hpp"
#include "flagdeg/poisson.hpp"
#include "flagdeg/polyalg.hpp"
#include "flagdeg/rootsys.hpp"
#include "flagdeg/serialize.hpp"
#include "flagdeg/weyl.hpp"
