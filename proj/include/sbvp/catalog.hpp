#pragma once

#include <string>
#include <vector>

#include "sbvp/solver.hpp"

namespace sbvp {

/// Built-in nonlinearities:
///   zero                      f = 0
///   linear mu                 f(x) = mu x
///   sine A                    f(x) = A sin x
///   erf-band                  f(x) = pi^2 \int_0^x e^{-u^2} du
///   band-affine c d           f(x) = c x + d sin x  (f' in [c-|d|, c+|d|])
Nonlinearity make_nonlinearity(const std::string& name, const std::vector<double>& params);

std::vector<std::string> catalog_names();

}  // namespace sbvp
