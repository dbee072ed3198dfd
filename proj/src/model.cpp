// Copyright 2026 The pgnet Authors
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

#include "pgnet/model.hpp"

#include <cmath>
#include <sstream>

#include "pgnet/error.hpp"

namespace pgnet {

void ModelParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(lambda)) {
    throw InvalidArgument("model parameters must be finite: " + to_string());
  }
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be > 0: " + to_string());
  if (b < 0.0) throw InvalidArgument("b must be >= 0: " + to_string());
  if (a < -1.0) throw InvalidArgument("a must be >= -1: " + to_string());
}

void ModelParams::validate_offset_form() const {
  validate();
  if (a != b || a < 0.0) {
    throw InvalidArgument("offset attachment r(k)=k+a needs a == b >= 0: " +
                          to_string());
  }
}

std::string ModelParams::to_string() const {
  std::ostringstream os;
  os << "(a=" << a << ", b=" << b << ", lambda=" << lambda << ")";
  return os.str();
}

}  // namespace pgnet
