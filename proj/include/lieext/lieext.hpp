#pragma once

#include "lieext/scalar.hpp"
#include "lieext/matrix.hpp"
#include "lieext/subspace.hpp"
#include "lieext/lie_algebra.hpp"
#include "lieext/series.hpp"
#include "lieext/catalog.hpp"
#include "lieext/cocycle.hpp"
#include "lieext/cohomology.hpp"
#include "lieext/extension.hpp"
#include "lieext/automorphism.hpp"
#include "lieext/orbits.hpp"
#include "lieext/algebra_io.hpp"
#include "lieext/report.hpp"
#include "lieext/suite.hpp"
