#pragma once

#include "pga/error.hpp"
#include "pga/report.hpp"
#include "pga/linalg.hpp"
#include "pga/union_find.hpp"
#include "pga/groupoid.hpp"
#include "pga/split_ring.hpp"
#include "pga/partial_action.hpp"
#include "pga/datum.hpp"
#include "pga/globalization.hpp"
#include "pga/skew_algebra.hpp"
#include "pga/galois.hpp"
#include "pga/enumerate.hpp"
#include "pga/fixtures.hpp"
#include "pga/scenario.hpp"
#include "pga/registry.hpp"
#include "pga/claims.hpp"
#include "pga/commands.hpp"
