#pragma once

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/linear_system.hpp"
#include "tornheim/exact/rational.hpp"
#include "tornheim/exact/symbolic.hpp"
#include "tornheim/identities.hpp"
#include "tornheim/integrals/integrals.hpp"
#include "tornheim/integrals/quadrature.hpp"
#include "tornheim/oracle/direct_sum.hpp"
#include "tornheim/oracle/explicit_formula.hpp"
#include "tornheim/oracle/verify.hpp"
#include "tornheim/reduction.hpp"
#include "tornheim/specfun/bernoulli.hpp"
#include "tornheim/specfun/clausen.hpp"
#include "tornheim/specfun/context.hpp"
#include "tornheim/specfun/kernels.hpp"
#include "tornheim/specfun/zeta.hpp"
