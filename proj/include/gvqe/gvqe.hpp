#pragma once

// Umbrella header: graph spectra via Pauli compilation and a variational
// eigensolver on a built-in statevector simulator.

#include "gvqe/eig.hpp"
#include "gvqe/errors.hpp"
#include "gvqe/experiments.hpp"
#include "gvqe/fit.hpp"
#include "gvqe/graph.hpp"
#include "gvqe/matrix.hpp"
#include "gvqe/nelder_mead.hpp"
#include "gvqe/pauli.hpp"
#include "gvqe/rng.hpp"
#include "gvqe/statevector.hpp"
#include "gvqe/vqe.hpp"
