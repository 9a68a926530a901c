#pragma once

#include <set>
#include <string>

#include "qhal/model.hpp"
#include "qhal/norms.hpp"
#include "qhal/pair_algebra.hpp"
#include "qhal/report.hpp"

namespace qhal {

// File formats
// ------------
// JSON:
//   PhaseFunction   {"n": 1, "N": 9, "values": [[re, im], ...]}   row-major (x major, xi minor)
//   Operator        {"n": 1, "N": 9, "matrix": [[[re, im], ...], ...]}   row-major
//   StateVector     [[re, im], ...]   bare array, length d (model supplied by caller)
//   zero set        [[x, xi, j], ...]
//   reports         {"name", "checks": [...], "params", "seed"}
// CSV (header line included on write, optional on read):
//   PhaseFunction   x,xi,re,im
//   Operator        row,col,re,im
//   DoubledFunction x,xi,j,re,im
//
// Numbers are written with enough digits (%.17g for CSV, full-precision JSON)
// that a write -> read round trip reproduces every double bit-exactly.
// All writers are atomic: content goes to a temp file in the target directory
// which is then renamed over the destination.

// --- JSON ------------------------------------------------------------------

std::string phase_function_to_json(const PhaseFunction& f);
PhaseFunction phase_function_from_json(const std::string& text);

std::string operator_to_json(const Operator& a);
Operator operator_from_json(const std::string& text);

/// Bare array of [re, im]; the model is not stored, so loading needs one.
std::string state_vector_to_json(const StateVector& phi);
StateVector state_vector_from_json(const std::string& text, const ModelParams& p);

std::string zero_set_to_json(const std::set<DoubledPoint>& s, const ModelParams& p);
std::set<DoubledPoint> zero_set_from_json(const std::string& text, const ModelParams& p);

std::string verification_report_to_json(const VerificationReport& r);
std::string equivalence_report_to_json(const EquivalenceReport& r, const ModelParams& p);

// --- CSV -------------------------------------------------------------------

std::string phase_function_to_csv(const PhaseFunction& f);
PhaseFunction phase_function_from_csv(const std::string& text, const ModelParams& p);

std::string operator_to_csv(const Operator& a);
Operator operator_from_csv(const std::string& text, const ModelParams& p);

std::string doubled_function_to_csv(const DoubledFunction& g);
DoubledFunction doubled_function_from_csv(const std::string& text, const ModelParams& p);

// --- Files -----------------------------------------------------------------

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string& path);

/// Writes atomically: temp file in the same directory, then rename.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qhal
