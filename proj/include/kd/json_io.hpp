#pragma once

#include <json.hpp>

#include "kd/jacobian.hpp"
#include "kd/torelli.hpp"

namespace kd {

using json = nlohmann::json;

/// {rows, cols, entries: [[decimal strings]]}
json to_json(const IntMat& m);
/// {rows, cols, entries: [["p/q" strings]]}
json to_json(const RatMat& m);
/// [{gen, exp}, ...]
json to_json(const Word& w);
json to_json(const Presentation& p);

IntMat int_matrix_from_json(const json& j);
RatMat rat_matrix_from_json(const json& j);
Word word_from_json(const json& j, const Presentation& context);

/// Whitespace-separated rows, one matrix row per line; '#' starts a comment.
IntMat read_int_matrix_file(const std::string& path);
RatMat read_rat_matrix_file(const std::string& path);

json covering_report(const CoveringData& cd);
json torelli_report(const LiftClassification& c, const LiftConstraintSystem& sys,
                    bool include_trace);

struct JacobianReport {
    SurfaceSpec spec;
    IntMat A;
    RealPartDescription components;
    KleinJacobian klein;
    IsomorphismCheck isomorphism;
};

/// Builds the full per-genus report.  A and Y default to the pipeline matrix
/// and the identity; a caller-supplied A must be (g-1) x (g-1).
JacobianReport build_jacobian_report(const SurfaceSpec& spec, const IntMat* A_override = nullptr,
                                     const RatMat* Y_override = nullptr);

json to_json(const JacobianReport& r);

} // namespace kd
