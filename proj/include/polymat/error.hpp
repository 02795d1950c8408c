// Copyright 2026 The Authors.
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

#ifndef POLYMAT_ERROR_HPP_
#define POLYMAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polymat {

// Out-of-range family parameters, window lengths, shifts.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally bad input: empty presentation sets, mixed moduli, dimension
// mismatches, malformed JSON documents.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds a size guard (n too large for a subset
// sweep, a degree section too large to index, ...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition by the caller, e.g. asking
// for a witness of a pair that is not a base ring.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polymat

#endif  // POLYMAT_ERROR_HPP_
