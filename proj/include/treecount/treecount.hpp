#pragma once

#include "bigint.hpp"
#include "bijection.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "identity.hpp"
#include "membership.hpp"
#include "polynomial.hpp"
#include "series.hpp"
#include "shape.hpp"
#include "statistics.hpp"
