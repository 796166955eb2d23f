/*
   Copyright 2026 The dhecke Authors

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

#ifndef DHECKE_DHECKE_HPP
#define DHECKE_DHECKE_HPP

#include "acceptance.hpp"
#include "charpoly.hpp"
#include "cocycle.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "hecke.hpp"
#include "identities.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "tree.hpp"
#include "upoly.hpp"

#endif
