// Copyright 2026 The qig Authors
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

#include "qig/channel.hpp"
#include "qig/dilation.hpp"
#include "qig/errors.hpp"
#include "qig/generate.hpp"
#include "qig/info.hpp"
#include "qig/io.hpp"
#include "qig/majorization.hpp"
#include "qig/matrix.hpp"
#include "qig/rng.hpp"
#include "qig/suite.hpp"
#include "qig/tolerances.hpp"
