/*
 * Copyright 2026 The upkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "upkit/components.hpp"
#include "upkit/error.hpp"
#include "upkit/moeglin.hpp"
#include "upkit/params.hpp"
#include "upkit/partition.hpp"
#include "upkit/pieces.hpp"
#include "upkit/primitivity.hpp"
#include "upkit/springer.hpp"
#include "upkit/verify.hpp"
#include "upkit/wreps.hpp"
