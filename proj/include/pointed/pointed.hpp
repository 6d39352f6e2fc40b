#pragma once

#include "pointed/errors.hpp"
#include "pointed/rational.hpp"
#include "pointed/cyclotomic.hpp"
#include "pointed/linalg.hpp"
#include "pointed/parallel.hpp"
#include "pointed/groups.hpp"
#include "pointed/racks.hpp"
#include "pointed/yetter_drinfeld.hpp"
#include "pointed/nichols.hpp"
#include "pointed/hopf.hpp"
#include "pointed/bosonization.hpp"
#include "pointed/cocycles.hpp"
#include "pointed/deform.hpp"
