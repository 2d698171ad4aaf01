// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_SELFCHECK_HPP
#define IRSEC_SELFCHECK_HPP

#include <cstdint>

#include <json.hpp>

namespace irsec::selfcheck {

/// Cross-checks the closed-form solver pieces against brute-force reference
/// computations (grid search, random search, Monte Carlo moments) and
/// returns a machine-readable report. Backs the CLI `oracle` subcommand.
nlohmann::ordered_json run(std::uint64_t seed);

} // namespace irsec::selfcheck

#endif
