#pragma once

#include "geronimus/connection.hpp"
#include "geronimus/context.hpp"
#include "geronimus/error.hpp"
#include "geronimus/ladder.hpp"
#include "geronimus/measures.hpp"
#include "geronimus/ode.hpp"
#include "geronimus/oracles.hpp"
#include "geronimus/quadrature.hpp"
#include "geronimus/recurrence.hpp"
#include "geronimus/reference.hpp"
#include "geronimus/secondkind.hpp"
#include "geronimus/verify.hpp"
#include "geronimus/zeros.hpp"
