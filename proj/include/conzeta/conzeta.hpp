#pragma once

#include "conzeta/error.hpp"
#include "conzeta/numeric.hpp"
#include "conzeta/rng.hpp"
#include "conzeta/complex.hpp"
#include "conzeta/generators.hpp"
#include "conzeta/complex_io.hpp"
#include "conzeta/corpus.hpp"
#include "conzeta/matrix.hpp"
#include "conzeta/operators.hpp"
#include "conzeta/polynomial.hpp"
#include "conzeta/charpoly.hpp"
#include "conzeta/minors.hpp"
#include "conzeta/deformation.hpp"
#include "conzeta/eigen.hpp"
#include "conzeta/zeta.hpp"
#include "conzeta/roots.hpp"
#include "conzeta/gamma.hpp"
#include "conzeta/quadrature.hpp"
#include "conzeta/limits.hpp"
#include "conzeta/verify.hpp"
#include "conzeta/manifest.hpp"
