/* Copyright 2026 The Relevanza Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Umbrella header.

#pragma once

#include "relevanza/enumerate.hpp"
#include "relevanza/errors.hpp"
#include "relevanza/extraction.hpp"
#include "relevanza/formula.hpp"
#include "relevanza/frame.hpp"
#include "relevanza/gridmodel.hpp"
#include "relevanza/hilbert.hpp"
#include "relevanza/io.hpp"
#include "relevanza/parser.hpp"
#include "relevanza/reduction.hpp"
#include "relevanza/semantics.hpp"
#include "relevanza/tiling.hpp"
