#pragma once

// Umbrella header.

#include "field.hpp"
#include "matrix.hpp"
#include "quiver.hpp"
#include "representation.hpp"
#include "algebra.hpp"
#include "analysis.hpp"
#include "static.hpp"
#include "classify.hpp"
#include "ab_closure.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "registry.hpp"
#include "examples.hpp"
