/*
   Copyright 2026 The skew authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Umbrella header for the library (everything except the command-line front end).

#include "skew/field.hpp"
#include "skew/ypoly.hpp"
#include "skew/ring.hpp"
#include "skew/skewpoly.hpp"
#include "skew/bounds.hpp"
#include "skew/scalar_poly.hpp"
#include "skew/verdict.hpp"
#include "skew/criteria.hpp"
#include "skew/oracle.hpp"
#include "skew/text.hpp"
