// Copyright 2026 The expq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/// @file optimizers.hpp
/// @brief All optimizers.

#pragma once

#include "expq/optimizers/altopt.hpp"
#include "expq/optimizers/basinhopping.hpp"
#include "expq/optimizers/genetic.hpp"
#include "expq/optimizers/linear_trust_region.hpp"
#include "expq/optimizers/nft.hpp"
#include "expq/optimizers/objective.hpp"
#include "expq/optimizers/tabu.hpp"
