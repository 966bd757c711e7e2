#pragma once

#include "epgap/core/contraction.hpp"
#include "epgap/core/contraction_degeneracy.hpp"
#include "epgap/core/decomposition.hpp"
#include "epgap/core/degeneracy.hpp"
#include "epgap/core/error.hpp"
#include "epgap/core/generators.hpp"
#include "epgap/core/graph.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/core/limits.hpp"
#include "epgap/core/multigraph.hpp"
#include "epgap/core/rng.hpp"
#include "epgap/core/vertex_set.hpp"
#include "epgap/epd/bounds.hpp"
#include "epgap/epd/certificate.hpp"
#include "epgap/epd/hitting_set.hpp"
#include "epgap/epd/packing.hpp"
#include "epgap/epd/separation.hpp"
#include "epgap/harness/properties.hpp"
#include "epgap/harness/suite.hpp"
#include "epgap/io/json.hpp"
#include "epgap/minors/minor_model.hpp"
#include "epgap/minors/search.hpp"
#include "epgap/structure/degree_lemmas.hpp"
#include "epgap/structure/erdos_szekeres.hpp"
#include "epgap/structure/extraction.hpp"
#include "epgap/structure/linkage.hpp"
#include "epgap/structure/matching.hpp"
#include "epgap/structure/minor_lemmas.hpp"
#include "epgap/structure/partition.hpp"
#include "epgap/structure/planted.hpp"
#include "epgap/structure/trees.hpp"
#include "epgap/width/flow.hpp"
#include "epgap/width/mesh.hpp"
#include "epgap/width/nice.hpp"
#include "epgap/width/pathwidth.hpp"
#include "epgap/width/treewidth.hpp"
#include "epgap/width/verify.hpp"
