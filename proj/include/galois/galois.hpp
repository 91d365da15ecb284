#pragma once

#include "galois/bigfloat.hpp"
#include "galois/classify.hpp"
#include "galois/database.hpp"
#include "galois/error.hpp"
#include "galois/groups.hpp"
#include "galois/integer.hpp"
#include "galois/invariants.hpp"
#include "galois/irreducible.hpp"
#include "galois/modp.hpp"
#include "galois/nsn.hpp"
#include "galois/polynomial.hpp"
#include "galois/realroots.hpp"
#include "galois/resultant.hpp"
