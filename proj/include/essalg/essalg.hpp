#pragma once

#include "essalg/certificates.hpp"
#include "essalg/comm.hpp"
#include "essalg/common.hpp"
#include "essalg/dimension.hpp"
#include "essalg/expr.hpp"
#include "essalg/findim.hpp"
#include "essalg/geometry.hpp"
#include "essalg/groebner.hpp"
#include "essalg/hochschild.hpp"
#include "essalg/koszul.hpp"
#include "essalg/lie.hpp"
#include "essalg/linalg.hpp"
#include "essalg/monomial.hpp"
#include "essalg/nc.hpp"
#include "essalg/order.hpp"
#include "essalg/points.hpp"
#include "essalg/polynomial.hpp"
#include "essalg/scalar.hpp"
#include "essalg/selftest.hpp"
#include "essalg/smoothness.hpp"
#include "essalg/standardize.hpp"
