#pragma once

#include "bomega/brandt.hpp"
#include "bomega/equations.hpp"
#include "bomega/errors.hpp"
#include "bomega/family.hpp"
#include "bomega/report.hpp"
#include "bomega/semigroup.hpp"
#include "bomega/text.hpp"
#include "bomega/topology.hpp"
#include "bomega/universe.hpp"
#include "bomega/verification.hpp"
