#pragma once

// Everything except JSON I/O, which needs the vendored json.hpp.

#include <bivar/berzolari_radon.hpp>
#include <bivar/factor.hpp>
#include <bivar/hbasis.hpp>
#include <bivar/lattices.hpp>
#include <bivar/linalg.hpp>
#include <bivar/maximal_line.hpp>
#include <bivar/nodes.hpp>
#include <bivar/poly.hpp>
#include <bivar/random.hpp>
#include <bivar/scalar.hpp>
#include <bivar/sweep.hpp>
#include <bivar/syzygy.hpp>
#include <bivar/univariate.hpp>
