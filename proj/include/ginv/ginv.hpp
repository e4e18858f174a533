#pragma once

// Umbrella header for the exact generalized-inverse library.

#include "ginv/central.hpp"
#include "ginv/classical.hpp"
#include "ginv/core_family.hpp"
#include "ginv/errors.hpp"
#include "ginv/matrix.hpp"
#include "ginv/rational.hpp"
#include "ginv/report.hpp"
#include "ginv/verify.hpp"
#include "ginv/zn_oracle.hpp"
