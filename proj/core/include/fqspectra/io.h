// Copyright 2026 The fqspectra Authors.
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

#ifndef FQSPECTRA_IO_H_
#define FQSPECTRA_IO_H_

#include <iosfwd>
#include <string>

#include "fqspectra/energy.h"
#include "fqspectra/experiments.h"
#include "fqspectra/regularity.h"
#include "fqspectra/spectra.h"

namespace fqs {

// Counts that fit an unsigned 64-bit word are written as JSON numbers,
// larger ones as decimal strings.

// Header "m re im modulus", one line per character in encoding order.
void write_spectrum_table(std::ostream& out, const Spectrum& s);
std::string spectrum_json(const Spectrum& s, bool pretty = false);

std::string energy_profile_json(const EnergyProfile& profile, bool pretty = false);
std::string regularity_json(const RegularityReport& r, bool pretty = false);

std::string report_json(const CoverageReport& r, bool pretty = false);
std::string report_json(const EnergyBoundReport& r, bool pretty = false);
std::string report_json(const SumsetReport& r, bool pretty = false);

// One row per record.
void write_report_csv(std::ostream& out, const CoverageReport& r);
void write_report_csv(std::ostream& out, const EnergyBoundReport& r);
void write_report_csv(std::ostream& out, const SumsetReport& r);

}  // namespace fqs

#endif  // FQSPECTRA_IO_H_
