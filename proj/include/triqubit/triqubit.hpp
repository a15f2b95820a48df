// Copyright 2026 The triqubit Authors
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

#pragma once

#include "triqubit/bipartite.hpp"
#include "triqubit/cayley.hpp"
#include "triqubit/errors.hpp"
#include "triqubit/json_io.hpp"
#include "triqubit/ket_parser.hpp"
#include "triqubit/local_unitary.hpp"
#include "triqubit/measurement.hpp"
#include "triqubit/random.hpp"
#include "triqubit/scalar.hpp"
#include "triqubit/separability.hpp"
#include "triqubit/state.hpp"
#include "triqubit/table.hpp"
