// Copyright 2026 The drgkit Authors.
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

// Umbrella header for the whole library.

#ifndef DRG_DRG_HPP_
#define DRG_DRG_HPP_

#include "drg/automorphism.hpp"
#include "drg/classifier.hpp"
#include "drg/cliques.hpp"
#include "drg/dual.hpp"
#include "drg/error.hpp"
#include "drg/generators.hpp"
#include "drg/geometry.hpp"
#include "drg/graph.hpp"
#include "drg/graph_io.hpp"
#include "drg/serialize.hpp"
#include "drg/linalg.hpp"
#include "drg/motion.hpp"
#include "drg/params.hpp"
#include "drg/report.hpp"
#include "drg/scan.hpp"
#include "drg/spectral.hpp"
#include "drg/tridiagonal.hpp"

#endif  // DRG_DRG_HPP_
