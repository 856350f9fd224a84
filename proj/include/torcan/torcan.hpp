#pragma once

// Umbrella header: exact-arithmetic machinery for torus-bundle classes over
// a fixed base — integer normal forms, finite abelian groups, GL(n, Z)
// orbit decision with witnesses, equivariant monomial maps, lattice
// sections, and the dual-graph calculus with its shipped fixtures.

#include "torcan/intmat.hpp"
#include "torcan/abelian.hpp"
#include "torcan/bundles.hpp"
#include "torcan/monomial.hpp"
#include "torcan/lattice.hpp"
#include "torcan/sncgraph.hpp"
#include "torcan/claims.hpp"
