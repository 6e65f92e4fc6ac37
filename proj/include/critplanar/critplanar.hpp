#pragma once

#include "critplanar/coloring.hpp"
#include "critplanar/constructions.hpp"
#include "critplanar/criticality.hpp"
#include "critplanar/dot.hpp"
#include "critplanar/error.hpp"
#include "critplanar/formats.hpp"
#include "critplanar/graph.hpp"
#include "critplanar/graph6.hpp"
#include "critplanar/planarity.hpp"
#include "critplanar/recipe.hpp"
#include "critplanar/report.hpp"
