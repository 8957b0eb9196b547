#pragma once

#include "liecoh/catalog.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/io.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/rational.hpp"
#include "liecoh/representation.hpp"
#include "liecoh/structure.hpp"
#include "liecoh/theorems.hpp"
