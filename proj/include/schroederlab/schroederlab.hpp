#pragma once

#include "laurent.hpp"
#include "ratfunc.hpp"
#include "matrix.hpp"
#include "paths.hpp"
#include "lbp.hpp"
#include "lgv.hpp"
#include "bijection.hpp"
#include "narayana.hpp"
#include "serialize.hpp"
#include "checks.hpp"
