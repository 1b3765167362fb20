#pragma once

#include "errors.hpp"
#include "laurent.hpp"
#include "combinatorics.hpp"
#include "fock.hpp"
#include "crystal.hpp"
#include "canonical.hpp"
#include "factorize.hpp"
#include "abacus.hpp"
#include "io.hpp"
