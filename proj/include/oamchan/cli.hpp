// SPDX-License-Identifier: Apache-2.0
//
// oamchan - OAM wireless channel modelling and estimation library
// Copyright (C) 2026 the oamchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef oamchan_cli_H
#define oamchan_cli_H

namespace oamchan
{

// Entry point behind the `oamchan` binary. Subcommands: generate, synthesize,
// estimate, stats, pathloss, capacity. Returns 0 on success; on failure prints
// one `error: <message>` line to stderr and returns nonzero.
int cli_dispatch(int argc, const char *const *argv);

} // namespace oamchan

#endif
