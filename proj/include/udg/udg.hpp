#pragma once

#include "udg/blocks.hpp"
#include "udg/bounds.hpp"
#include "udg/chains.hpp"
#include "udg/constructions.hpp"
#include "udg/crossings.hpp"
#include "udg/error.hpp"
#include "udg/exactfield.hpp"
#include "udg/faces.hpp"
#include "udg/geom.hpp"
#include "udg/model.hpp"
#include "udg/numtheory.hpp"
#include "udg/spatial.hpp"
#include "udg/svg.hpp"
