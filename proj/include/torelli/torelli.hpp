#pragma once

#include "torelli/errors.hpp"
#include "torelli/freegroup.hpp"
#include "torelli/freelie.hpp"
#include "torelli/johnson.hpp"
#include "torelli/magnus.hpp"
#include "torelli/mcglib.hpp"
#include "torelli/present.hpp"
#include "torelli/spinquad.hpp"
