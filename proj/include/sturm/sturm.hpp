#pragma once

#include "sturm/ball_template.hpp"
#include "sturm/cell_complex.hpp"
#include "sturm/errors.hpp"
#include "sturm/invariants.hpp"
#include "sturm/io.hpp"
#include "sturm/meander.hpp"
#include "sturm/path_designer.hpp"
#include "sturm/surgery.hpp"
