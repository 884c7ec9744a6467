// Copyright 2026 The qslasym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qsl/asymmetry.hpp"
#include "qsl/bounds.hpp"
#include "qsl/channels.hpp"
#include "qsl/config.hpp"
#include "qsl/distinguishability.hpp"
#include "qsl/error.hpp"
#include "qsl/evolution.hpp"
#include "qsl/extended_real.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/random.hpp"
#include "qsl/states.hpp"
