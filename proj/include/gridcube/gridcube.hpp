#pragma once

#include "gridcube/embedding.hpp"
#include "gridcube/graycode.hpp"
#include "gridcube/io.hpp"
#include "gridcube/specs.hpp"
#include "gridcube/topology.hpp"
#include "gridcube/verify.hpp"
