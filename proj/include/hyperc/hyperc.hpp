#pragma once

// Umbrella header: eigenvector centralities for m-uniform hypergraphs.

#include "hyperc/analysis.hpp"
#include "hyperc/cec.hpp"
#include "hyperc/errors.hpp"
#include "hyperc/hec.hpp"
#include "hyperc/hypergraph.hpp"
#include "hyperc/ingest.hpp"
#include "hyperc/io.hpp"
#include "hyperc/sunflower.hpp"
#include "hyperc/tensor_ops.hpp"
#include "hyperc/vector_ops.hpp"
#include "hyperc/version.hpp"
#include "hyperc/zec.hpp"
