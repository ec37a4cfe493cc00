// Copyright 2026 The uct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the uct library.

#pragma once

#include "uct/cliques.hpp"
#include "uct/cograph.hpp"
#include "uct/dispatch.hpp"
#include "uct/errors.hpp"
#include "uct/graph.hpp"
#include "uct/incidence.hpp"
#include "uct/induced_matching.hpp"
#include "uct/lexbfs.hpp"
#include "uct/oracle.hpp"
#include "uct/proper_interval.hpp"
#include "uct/random_graphs.hpp"
#include "uct/recognize.hpp"
#include "uct/reductions.hpp"
#include "uct/result.hpp"
#include "uct/split.hpp"
#include "uct/triangle_free.hpp"
