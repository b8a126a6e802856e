#pragma once

#include "ortho/bounds.hpp"
#include "ortho/chord_diagram.hpp"
#include "ortho/closed_forms.hpp"
#include "ortho/error.hpp"
#include "ortho/graph.hpp"
#include "ortho/io.hpp"
#include "ortho/lim_solver.hpp"
#include "ortho/oracle.hpp"
#include "ortho/remark.hpp"
#include "ortho/rng.hpp"
#include "ortho/survey.hpp"
#include "ortho/transfer.hpp"
