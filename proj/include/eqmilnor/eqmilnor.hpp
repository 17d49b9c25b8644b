#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "localalg.hpp"
#include "repn.hpp"
#include "equivariant.hpp"
#include "theorem.hpp"
#include "report.hpp"
