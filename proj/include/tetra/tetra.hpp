// Copyright 2026 The tetra Authors
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

#pragma once

#include "tetra/basis.hpp"
#include "tetra/bloch_vector.hpp"
#include "tetra/entanglement.hpp"
#include "tetra/fiducial.hpp"
#include "tetra/geometry.hpp"
#include "tetra/hierarchy.hpp"
#include "tetra/polynomial.hpp"
#include "tetra/qcore.hpp"
#include "tetra/report.hpp"
#include "tetra/reproduce.hpp"
#include "tetra/search.hpp"
