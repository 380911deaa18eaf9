/*
 * Copyright 2026 The seqpose Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEQPOSE_IO_KEY_VALUE_H_
#define SEQPOSE_IO_KEY_VALUE_H_

#include <istream>
#include <map>
#include <optional>
#include <string>

namespace seqpose {

// `key=value` lines; blank lines and '#' comments are skipped, whitespace
// around keys and values is trimmed. Later keys override earlier ones.
class KeyValueFile {
 public:
  static KeyValueFile Parse(std::istream& in);
  // Throws Error(kIo) if the file cannot be opened.
  static KeyValueFile Load(const std::string& path);

  bool Has(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> Get(const std::string& key) const;
  // Throw Error(kFormat) when present but unparsable.
  std::optional<double> GetDouble(const std::string& key) const;
  std::optional<long long> GetInt(const std::string& key) const;

  void Set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace seqpose

#endif  // SEQPOSE_IO_KEY_VALUE_H_
