#pragma once

#include "qmem/bounds.hpp"
#include "qmem/combinatorics.hpp"
#include "qmem/error.hpp"
#include "qmem/functions.hpp"
#include "qmem/io.hpp"
#include "qmem/linalg.hpp"
#include "qmem/parallel.hpp"
#include "qmem/prob.hpp"
#include "qmem/quantum.hpp"
#include "qmem/random.hpp"
#include "qmem/scenarios.hpp"
