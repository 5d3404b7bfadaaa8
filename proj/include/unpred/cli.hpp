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

#include <iosfwd>
#include <string>
#include <vector>

namespace unpred::cli {

enum ExitStatus : int
{
  kSuccess    = 0,
  kRunFailure = 1,  // domain, coverage, resource, format or I/O errors
  kUsage      = 2,
};

/// Runs one invocation. args[0] is the program name. Artifacts go to the
/// files named by --out, or to `out` when --out is absent.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace unpred::cli
