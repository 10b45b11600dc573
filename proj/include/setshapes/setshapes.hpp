// Copyright 2026 The setshapes Authors
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

#include "setshapes/cutouts.hpp"
#include "setshapes/error.hpp"
#include "setshapes/geometry.hpp"
#include "setshapes/io.hpp"
#include "setshapes/metrics.hpp"
#include "setshapes/partition.hpp"
#include "setshapes/patterns.hpp"
#include "setshapes/pipeline.hpp"
#include "setshapes/render.hpp"
#include "setshapes/stacking.hpp"
#include "setshapes/synthetic.hpp"
