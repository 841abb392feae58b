// Copyright 2026 The minwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINWIT_IO_H
#define MINWIT_IO_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "minwit/correlations.h"
#include "minwit/evaluator.h"
#include "minwit/oracle.h"
#include "minwit/state.h"
#include "minwit/witness.h"

namespace minwit {

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

/// CSV with header `index,value,stderr`; lines starting with '#' carry
/// `key: value` metadata (`n_qubits` among them).
CorrelationSet read_correlations_csv(std::string_view text);
std::string write_correlations_csv(const CorrelationSet &corrs);

CorrelationSet read_correlations_json(std::string_view text);
std::string write_correlations_json(const CorrelationSet &corrs);

/// Dispatches on the extension: ".json" is JSON, anything else CSV.
CorrelationSet parse_correlations(const std::string &path);
void write_correlations(const CorrelationSet &corrs, const std::string &path);

/// Accepts a single record object or an array of records.
std::vector<CountsRecord> read_counts_json(std::string_view text);
std::string write_counts_json(const std::vector<CountsRecord> &records);

/// Per-setting parity estimates with stderr sqrt((1 - T^2)/(M - 1)); a
/// correlation seen by several settings is combined by inverse variance.
CorrelationSet correlations_from_counts(const std::vector<CountsRecord> &records);

std::string state_to_json(const StateVector &psi);
StateVector state_from_json(std::string_view text);

std::string witness_to_json(const WitnessSpec &witness);
WitnessSpec witness_from_json(std::string_view text);

std::string report_to_json(const EvaluationReport &report);

std::string oracle_reports_to_json(const std::vector<OracleReport> &reports);

std::string sweep_to_csv(const std::vector<SweepPoint> &points);
std::string sweep_to_json(const std::vector<SweepPoint> &points);

}  // namespace minwit

#endif
