// grad/grad-check.h

// Copyright 2026  artic authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ARTIC_GRAD_GRAD_CHECK_H_
#define ARTIC_GRAD_GRAD_CHECK_H_

#include <functional>

#include "grad/param-set.h"

namespace artic {

// Central finite differences against the recorded gradient.  The closure
// must evaluate the loss for the current parameter values, deterministically.
// Returns max over parameter entries of
//   |analytic - numeric| / max(|analytic|, |numeric|, 1e-8).
// The analytic gradient is taken from params.Grad(), so run the backward
// pass (with zeroed gradients) before calling.
double FiniteDifferenceCheck(const std::function<double()> &loss,
                             ParameterSet &params, double step = 1e-5);

}  // namespace artic

#endif  // ARTIC_GRAD_GRAD_CHECK_H_
