#pragma once

#include "qform.hpp"
#include "catalog.hpp"
#include "voronoi.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "sat.hpp"
#include "pipeline.hpp"
