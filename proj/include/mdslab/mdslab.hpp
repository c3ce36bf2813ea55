#pragma once

#include "mdslab/canonical.hpp"
#include "mdslab/cost.hpp"
#include "mdslab/enumerate.hpp"
#include "mdslab/errors.hpp"
#include "mdslab/field.hpp"
#include "mdslab/matrix.hpp"
#include "mdslab/matrix_io.hpp"
#include "mdslab/properties.hpp"
