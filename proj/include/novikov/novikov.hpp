#pragma once

// Umbrella header.

#include "novikov/error.hpp"
#include "novikov/rational.hpp"
#include "novikov/monomial.hpp"
#include "novikov/upoly.hpp"
#include "novikov/ring.hpp"
#include "novikov/polynomial.hpp"
#include "novikov/parse.hpp"
#include "novikov/groebner.hpp"
#include "novikov/linalg.hpp"
#include "novikov/algebra.hpp"
#include "novikov/variety.hpp"
#include "novikov/solve.hpp"
#include "novikov/io.hpp"
#include "novikov/iso.hpp"
#include "novikov/catalog.hpp"
#include "novikov/caa.hpp"
#include "novikov/verify.hpp"
