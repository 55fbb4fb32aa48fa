#pragma once

// Umbrella header: shape boundaries as dynamically thresholded proximity
// networks, structural measurements over threshold sweeps, and a supervised
// classification harness.

#include "contourgraph/classify.hpp"
#include "contourgraph/contour.hpp"
#include "contourgraph/curvature.hpp"
#include "contourgraph/dataset.hpp"
#include "contourgraph/descriptor.hpp"
#include "contourgraph/image.hpp"
#include "contourgraph/io.hpp"
#include "contourgraph/metrics.hpp"
#include "contourgraph/network.hpp"
#include "contourgraph/parallel.hpp"
#include "contourgraph/rng.hpp"
#include "contourgraph/shapes.hpp"
#include "contourgraph/version.hpp"
