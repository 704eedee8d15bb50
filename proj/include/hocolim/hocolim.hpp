#pragma once

#include "hocolim/bar_cobar.hpp"
#include "hocolim/category.hpp"
#include "hocolim/chain_complex.hpp"
#include "hocolim/dold_kan.hpp"
#include "hocolim/double_complex.hpp"
#include "hocolim/error.hpp"
#include "hocolim/homology_group.hpp"
#include "hocolim/matrix.hpp"
#include "hocolim/properties.hpp"
#include "hocolim/ring.hpp"
#include "hocolim/simplicial_set.hpp"
#include "hocolim/smith.hpp"
#include "hocolim/tensoring.hpp"
#include "hocolim/totalization.hpp"
