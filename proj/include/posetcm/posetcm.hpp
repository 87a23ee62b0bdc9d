#pragma once

#include "posetcm/perm.hpp"
#include "posetcm/poset.hpp"
#include "posetcm/field.hpp"
#include "posetcm/topology.hpp"
#include "posetcm/shelling.hpp"
#include "posetcm/cm.hpp"
#include "posetcm/sweep.hpp"
#include "posetcm/io.hpp"
