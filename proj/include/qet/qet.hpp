// Copyright 2026 The qet-steady Authors
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

#include "qet/config.hpp"
#include "qet/errors.hpp"
#include "qet/experiments.hpp"
#include "qet/io.hpp"
#include "qet/numerics.hpp"
#include "qet/protocol.hpp"
#include "qet/random.hpp"
#include "qet/redfield.hpp"
#include "qet/selfcheck.hpp"
#include "qet/system_model.hpp"
