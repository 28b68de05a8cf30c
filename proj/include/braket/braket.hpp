#pragma once

#include "braket/basis_state.hpp"
#include "braket/deutsch_jozsa.hpp"
#include "braket/dirac.hpp"
#include "braket/entanglement.hpp"
#include "braket/errors.hpp"
#include "braket/gates.hpp"
#include "braket/measurement.hpp"
#include "braket/operator.hpp"
#include "braket/quantum_state.hpp"
