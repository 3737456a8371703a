// Copyright 2026 The zsum Authors
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

#include <stdexcept>
#include <string>

namespace zsum {

// Root of every error the library throws on bad input or exhausted budgets.
// Internal invariant violations use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad modulus, non-prime where a prime is required,
// unparsable group spec, and similar.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A homomorphism whose generator images do not respect the source orders.
class IllDefinedHomError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Operation called on an input outside its domain (not zero-sum, contains
// the identity, not a UFIM, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IncompleteCatalogError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A lemma or constraint whose hypotheses do not cover the given group.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// Size caps, node budgets and time budgets.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace zsum
