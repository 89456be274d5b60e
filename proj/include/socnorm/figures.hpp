// Copyright 2026 The socnorm Authors.
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

// Plot-ready tables for the standard experiment set. Every table is
// deterministic; agent-based columns use fixed seeds.

#ifndef SOCNORM_FIGURES_HPP_
#define SOCNORM_FIGURES_HPP_

#include <string_view>
#include <vector>

#include "socnorm/export.hpp"

namespace socnorm {

// fig3 .. fig9. Throws Error(kInvalidArgument) for unknown names.
CsvTable FigureData(std::string_view name);

const std::vector<std::string_view>& FigureNames();

}  // namespace socnorm

#endif  // SOCNORM_FIGURES_HPP_
