#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bmbp {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

enum class ErrorCode {
  ParamRange,
  DimensionMismatch,
  DuplicateNodes,
  IndexRange,
  InvalidInput,
  UnsupportedBasis,
  BackendFailure,
  ZeroRecoveredBlock,
  DependentSet,
  LikelySingular,
  NotSingular,
  Io,
};

// Machine-readable name, e.g. "PARAM_RANGE".
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Side { Right, Left };

// Every numerical decision threshold lives here.
struct Tolerances {
  double infinite_beta = 1e-12;   // |beta| <= tol * hypot(alpha, beta) => infinite
  double nullspace_rank = 1e-10;  // relative SVD cut for nullspace extraction
  double minimal_rank = 1e-12;    // rank cut used by is_minimal_basis (times max dim)
  double candidate_rank = 1e-8;   // rank cut at computed candidate points
  double duality = 1e-12;         // K D^T defect relative to scale
  double identity = 1e-10;        // polynomial identity checks
  double chordal = 1e-8;          // eigenvalue multiset matching
  double node_proximity = 1e-14;  // barycentric near-node warning
  double node_match = 1e-8;       // eigenvalue treated as sitting on a node
  double residual = 1e-8;         // eigenpair backward error
  double condition_cap = 1e6;     // residual assertions skipped above this

  // Sets a field by name. Throws InvalidInput for unknown names.
  void set(const std::string& name, double value);
  double get(const std::string& name) const;
};

// Eigenvalue on the Riemann sphere.
struct Eigenvalue {
  cplx value{0.0, 0.0};
  bool infinite = false;

  static Eigenvalue finite(cplx v) { return {v, false}; }
  static Eigenvalue inf() { return {cplx(0.0, 0.0), true}; }
};

// Chordal distance on the Riemann sphere.
double chordal_distance(const Eigenvalue& a, const Eigenvalue& b);

}  // namespace bmbp
