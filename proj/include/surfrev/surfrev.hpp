#pragma once

#include "surfrev/errors.hpp"
#include "surfrev/scalar.hpp"
#include "surfrev/lorentz.hpp"
#include "surfrev/jet.hpp"
#include "surfrev/fd_oracle.hpp"
#include "surfrev/surface.hpp"
#include "surfrev/fd_geometry.hpp"
#include "surfrev/catalog.hpp"
#include "surfrev/ruled.hpp"
#include "surfrev/claims.hpp"
#include "surfrev/report.hpp"
