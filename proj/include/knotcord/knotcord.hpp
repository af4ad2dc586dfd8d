#pragma once

#include "knotcord/angle.hpp"
#include "knotcord/constructions.hpp"
#include "knotcord/error.hpp"
#include "knotcord/expr.hpp"
#include "knotcord/factor.hpp"
#include "knotcord/harness.hpp"
#include "knotcord/invariants.hpp"
#include "knotcord/matrix.hpp"
#include "knotcord/obstructions.hpp"
#include "knotcord/parse.hpp"
#include "knotcord/polynomial.hpp"
#include "knotcord/random.hpp"
#include "knotcord/report.hpp"
#include "knotcord/seifert.hpp"
