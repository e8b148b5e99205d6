/*
 * Copyright 2026 The nomvote Authors
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

#ifndef NOMVOTE_NOMVOTE_HPP
#define NOMVOTE_NOMVOTE_HPP

// Core headers depend only on the standard library. config.hpp and
// report.hpp additionally need nlohmann json.hpp on the include path.

#include "nomvote/analysis.hpp"
#include "nomvote/characterization.hpp"
#include "nomvote/domain.hpp"
#include "nomvote/error.hpp"
#include "nomvote/families.hpp"
#include "nomvote/oracle.hpp"
#include "nomvote/rules.hpp"
#include "nomvote/sweep.hpp"

#endif // NOMVOTE_NOMVOTE_HPP
