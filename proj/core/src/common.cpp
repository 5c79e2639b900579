#include "bmbp/common.hpp"

#include <cmath>

namespace bmbp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParamRange: return "PARAM_RANGE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::DuplicateNodes: return "DUPLICATE_NODES";
    case ErrorCode::IndexRange: return "INDEX_RANGE";
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::UnsupportedBasis: return "UNSUPPORTED_BASIS";
    case ErrorCode::BackendFailure: return "BACKEND_FAILURE";
    case ErrorCode::ZeroRecoveredBlock: return "ZERO_RECOVERED_BLOCK";
    case ErrorCode::DependentSet: return "DEPENDENT_SET";
    case ErrorCode::LikelySingular: return "LIKELY_SINGULAR";
    case ErrorCode::NotSingular: return "NOT_SINGULAR";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

namespace {

double* field(Tolerances& t, const std::string& name) {
  if (name == "infinite_beta") return &t.infinite_beta;
  if (name == "nullspace_rank") return &t.nullspace_rank;
  if (name == "minimal_rank") return &t.minimal_rank;
  if (name == "candidate_rank") return &t.candidate_rank;
  if (name == "duality") return &t.duality;
  if (name == "identity") return &t.identity;
  if (name == "chordal") return &t.chordal;
  if (name == "node_proximity") return &t.node_proximity;
  if (name == "node_match") return &t.node_match;
  if (name == "residual") return &t.residual;
  if (name == "condition_cap") return &t.condition_cap;
  return nullptr;
}

}  // namespace

void Tolerances::set(const std::string& name, double value) {
  double* f = field(*this, name);
  if (!f) throw Error(ErrorCode::InvalidInput, "unknown tolerance '" + name + "'");
  if (!(value > 0.0) || !std::isfinite(value))
    throw Error(ErrorCode::ParamRange, "tolerance '" + name + "' must be positive and finite");
  *f = value;
}

double Tolerances::get(const std::string& name) const {
  double* f = field(const_cast<Tolerances&>(*this), name);
  if (!f) throw Error(ErrorCode::InvalidInput, "unknown tolerance '" + name + "'");
  return *f;
}

double chordal_distance(const Eigenvalue& a, const Eigenvalue& b) {
  if (a.infinite && b.infinite) return 0.0;
  if (a.infinite) return 1.0 / std::sqrt(1.0 + std::norm(b.value));
  if (b.infinite) return 1.0 / std::sqrt(1.0 + std::norm(a.value));
  return std::abs(a.value - b.value) /
         (std::sqrt(1.0 + std::norm(a.value)) * std::sqrt(1.0 + std::norm(b.value)));
}

}  // namespace bmbp
