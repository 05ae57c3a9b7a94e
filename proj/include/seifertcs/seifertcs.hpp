#pragma once
// Umbrella header: exact invariants and partition-function assembly for
// Seifert-fibered three-manifolds with torus gauge group.

#include "seifertcs/checks.hpp"
#include "seifertcs/dedekind.hpp"
#include "seifertcs/errors.hpp"
#include "seifertcs/hp.hpp"
#include "seifertcs/invariants.hpp"
#include "seifertcs/partition.hpp"
#include "seifertcs/phase_file.hpp"
#include "seifertcs/rational.hpp"
#include "seifertcs/regularization.hpp"
#include "seifertcs/report.hpp"
#include "seifertcs/seifert.hpp"
#include "seifertcs/torsion.hpp"
