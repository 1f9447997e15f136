#pragma once

#include "superfock/entanglement.hpp"
#include "superfock/evolution.hpp"
#include "superfock/figures.hpp"
#include "superfock/fock.hpp"
#include "superfock/golden.hpp"
#include "superfock/observables.hpp"
#include "superfock/orthogonality.hpp"
#include "superfock/superstate.hpp"
#include "superfock/types.hpp"
#include "superfock/verify.hpp"
