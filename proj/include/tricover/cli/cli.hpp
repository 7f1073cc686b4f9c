/* Copyright (C) 2026 The tricover authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tricover {

// Exit codes of the command-line front end.
enum CliExit : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

// Runs one command (argv without the program name).  JSON results and
// domain-error objects go to `out`, usage messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands `--step NAME` into the subcommand words it stands for; other
// arguments pass through unchanged.  Unknown names throw std::invalid_argument.
std::vector<std::string> expand_step_alias(const std::vector<std::string>& args);

// Step names accepted by --step, with the command each one runs.
std::vector<std::pair<std::string, std::string>> step_aliases();

}  // namespace tricover
