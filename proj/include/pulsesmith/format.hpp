#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulsesmith/analysis.hpp"
#include "pulsesmith/bloch.hpp"

// JSON and CSV encodings of the library's value types. Floats are written in
// the shortest decimal form that parses back to the same double.
namespace pulsesmith {

using json = nlohmann::ordered_json;

std::string format_double(double v);

json to_json(const Mat2& m);
json to_json(const Pulse& p);
json to_json(const PulseSequence& seq);
json to_json(const SlopeReport& report);
json to_json(const OreResidualReport& report);
json to_json(const AxisSpec& axis);
json to_json(const FidelityGrid& grid);
json to_json(const Trajectory& traj);

/// Accepts the schema written by to_json(PulseSequence); `total_time` is
/// recomputed rather than trusted. Throws Error(Validation) on malformed input.
PulseSequence sequence_from_json(const json& doc);

/// Header `epsilon,f,fidelity`; f outer, epsilon inner.
void write_grid_csv(std::ostream& out, const FidelityGrid& grid);
/// Header `pulse_index,fraction,x,y,z`.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
/// Header `theta,L_scorbutus,L_skinsc,error`; failed entries are left empty.
void write_time_compare_csv(std::ostream& out, const std::vector<TimeCompareRow>& rows);

}  // namespace pulsesmith
