#pragma once

#include "bregman/centroids.hpp"
#include "bregman/divergences.hpp"
#include "bregman/errors.hpp"
#include "bregman/generators.hpp"
#include "bregman/numerics.hpp"
#include "bregman/representational.hpp"
#include "bregman/spheres.hpp"
