#pragma once

#include "umato/classify.hpp"
#include "umato/dataset.hpp"
#include "umato/datasets.hpp"
#include "umato/diagnostics.hpp"
#include "umato/error.hpp"
#include "umato/knn_graph.hpp"
#include "umato/metrics.hpp"
#include "umato/optimize.hpp"
#include "umato/parallel.hpp"
#include "umato/pca.hpp"
