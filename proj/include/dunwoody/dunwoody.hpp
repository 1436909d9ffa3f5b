#pragma once

// Umbrella header for the Dunwoody diagram library.

#include "dunwoody/sixtuple.hpp"
#include "dunwoody/open_graph.hpp"
#include "dunwoody/glued_diagram.hpp"
#include "dunwoody/traced_curves.hpp"
#include "dunwoody/admissibility.hpp"
#include "dunwoody/presentation.hpp"
#include "dunwoody/homology.hpp"
#include "dunwoody/classification.hpp"
#include "dunwoody/laurent.hpp"
#include "dunwoody/knot_oracle.hpp"
