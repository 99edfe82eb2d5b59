#pragma once

#include "designlab/design_io.hpp"
#include "designlab/designs.hpp"
#include "designlab/eigen_solver.hpp"
#include "designlab/errors.hpp"
#include "designlab/matrix.hpp"
#include "designlab/parallel.hpp"
#include "designlab/space.hpp"
#include "designlab/space_io.hpp"
#include "designlab/spectra.hpp"
#include "designlab/spectral.hpp"
#include "designlab/torus.hpp"
