#pragma once

// Umbrella header: the whole library.

#include "scmlab/util.hpp"
#include "scmlab/field.hpp"
#include "scmlab/monomial.hpp"
#include "scmlab/simplicial_complex.hpp"
#include "scmlab/stanley_reisner.hpp"
#include "scmlab/exact_rank.hpp"
#include "scmlab/homology.hpp"
#include "scmlab/invariants.hpp"
#include "scmlab/koszul.hpp"
#include "scmlab/graph.hpp"
#include "scmlab/graph6.hpp"
#include "scmlab/enumerate.hpp"
#include "scmlab/gen.hpp"
#include "scmlab/parallel.hpp"
#include "scmlab/report.hpp"
#include "scmlab/io.hpp"
#include "scmlab/theorems.hpp"
