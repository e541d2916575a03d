// Copyright 2026 The ParChoice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARCHOICE_EMBEDDED_RESOURCES_H_
#define PARCHOICE_EMBEDDED_RESOURCES_H_

#include <string_view>

namespace parchoice::internal {

std::string_view Embedded_irregular_verbs_tsv();
std::string_view Embedded_irregular_nouns_tsv();
std::string_view Embedded_function_words_txt();
std::string_view Embedded_stopwords_txt();

}  // namespace parchoice::internal

#endif  // PARCHOICE_EMBEDDED_RESOURCES_H_
