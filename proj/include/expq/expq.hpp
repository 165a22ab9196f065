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


/// @file expq.hpp
/// @brief Everything in the library.

#pragma once

#include "expq/encoding.hpp"
#include "expq/generators.hpp"
#include "expq/harness.hpp"
#include "expq/instance_io.hpp"
#include "expq/optimizers.hpp"
#include "expq/problems.hpp"
#include "expq/rng.hpp"
#include "expq/simulator.hpp"
#include "expq/text.hpp"
#include "expq/tsp.hpp"
