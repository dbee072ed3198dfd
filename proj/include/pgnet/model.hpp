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

#ifndef PGNET_MODEL_HPP_
#define PGNET_MODEL_HPP_

#include <cstdint>
#include <string>

namespace pgnet {

// Parameters of the Poisson-growth model. Attachment weight of a node with
// degree k is k + a for k >= 1 and b for k == 0; lambda is the expected
// number of edges brought by each new node.
struct ModelParams {
  double a = 0.0;
  double b = 0.0;
  double lambda = 1.0;

  // lambda > 0, b >= 0, a >= -1, all finite. Throws InvalidArgument.
  void validate() const;
  // The plain offset form r(k) = k + a additionally needs a == b >= 0.
  void validate_offset_form() const;

  double attachment_weight(std::uint64_t degree) const {
    return degree == 0 ? b : static_cast<double>(degree) + a;
  }

  std::string to_string() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

}  // namespace pgnet

#endif  // PGNET_MODEL_HPP_
