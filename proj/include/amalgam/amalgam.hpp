// Copyright 2026 The amalgam-lab Authors
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

#ifndef AMALGAM_AMALGAM_HPP
#define AMALGAM_AMALGAM_HPP

#include <amalgam/amalgamation.hpp>
#include <amalgam/corpus.hpp>
#include <amalgam/dsl.hpp>
#include <amalgam/error.hpp>
#include <amalgam/hom.hpp>
#include <amalgam/ideal.hpp>
#include <amalgam/lattice.hpp>
#include <amalgam/predicates.hpp>
#include <amalgam/quotient.hpp>
#include <amalgam/report.hpp>
#include <amalgam/ring.hpp>
#include <amalgam/sft.hpp>

#endif  // AMALGAM_AMALGAM_HPP
