#pragma once

#include <pentakirch/closed_forms.hpp>
#include <pentakirch/decimal.hpp>
#include <pentakirch/decomposition.hpp>
#include <pentakirch/exact.hpp>
#include <pentakirch/graph.hpp>
#include <pentakirch/matrix.hpp>
#include <pentakirch/numeric.hpp>
#include <pentakirch/parallel.hpp>
#include <pentakirch/spectral.hpp>
#include <pentakirch/surd.hpp>
#include <pentakirch/published_table.hpp>
#include <pentakirch/verify.hpp>
