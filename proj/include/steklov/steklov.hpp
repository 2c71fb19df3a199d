#pragma once

#include "steklov/bounds.hpp"
#include "steklov/curvature.hpp"
#include "steklov/eigen.hpp"
#include "steklov/errors.hpp"
#include "steklov/hypotheses.hpp"
#include "steklov/manifold.hpp"
#include "steklov/ode.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/radial.hpp"
#include "steklov/scaling.hpp"
#include "steklov/warp.hpp"
