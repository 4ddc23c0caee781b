// Copyright 2026 The qtime Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Umbrella header.
 */

#pragma once

#include "canonical_time.hpp"
#include "claims.hpp"
#include "denseness_sequences.hpp"
#include "errors.hpp"
#include "galapon_operator.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "spectral_core.hpp"
#include "zero_set_analysis.hpp"
