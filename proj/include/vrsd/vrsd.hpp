#pragma once

// Umbrella header for the sum-vector retrieval toolkit.

#include "vrsd/decision.hpp"
#include "vrsd/errors.hpp"
#include "vrsd/int_vec.hpp"
#include "vrsd/io.hpp"
#include "vrsd/metrics.hpp"
#include "vrsd/oracle.hpp"
#include "vrsd/reduction.hpp"
#include "vrsd/select.hpp"
#include "vrsd/synthetic.hpp"
#include "vrsd/types.hpp"
#include "vrsd/vector_ops.hpp"
