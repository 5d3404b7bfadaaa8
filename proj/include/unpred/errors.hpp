#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The unpred Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace unpred {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit status 1.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (bad alphabet, invalid probabilities, epsilon0 out of range, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A finite window or signal does not cover the index/time range requested.
class CoverageError : public Error
{
public:
  using Error::Error;
};

/// A request would exceed a configured size cap.
class ResourceError : public Error
{
public:
  using Error::Error;
};

/// Sampling is too coarse for the requested verification.
class ResolutionError : public Error
{
public:
  using Error::Error;
};

/// Malformed input file.
class FormatError : public Error
{
public:
  using Error::Error;
};

}  // namespace unpred
