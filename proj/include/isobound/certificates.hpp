#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isobound/exact.hpp"
#include "isobound/graph.hpp"
#include "isobound/hermitian.hpp"

namespace isobound {

constexpr double kProjectorTolerance = 1e-8;
constexpr double kRankTolerance = 1e-6;
constexpr double kIsotropyTolerance = 1e-7;

/// (vertex, index) for quantum certificates, (vertex) for packings.
struct ProjectorKey {
  Vertex vertex = 0;
  std::optional<int> index;

  friend auto operator<=>(const ProjectorKey &, const ProjectorKey &) = default;
  friend bool operator==(const ProjectorKey &, const ProjectorKey &) = default;
};

std::string to_string(const ProjectorKey &key);

/// Projectors in C^{d x d} keyed by vertex (and index). Absent keys stand for
/// the zero matrix. The projector property itself is checked by the
/// verifiers, not on insertion, so bad families can still be reported.
class ProjectorFamily {
public:
  explicit ProjectorFamily(int d);

  int d() const { return d_; }
  /// Throws DimensionMismatch when p.dim() != d().
  void set(ProjectorKey key, HermitianMatrix p);
  /// The stored matrix or the zero matrix.
  HermitianMatrix get(const ProjectorKey &key) const;
  const std::map<ProjectorKey, HermitianMatrix> &entries() const { return entries_; }

private:
  int d_;
  std::map<ProjectorKey, HermitianMatrix> entries_;
};

struct CertificateViolation {
  /// "key", "projector", "completeness", "orthogonal-vertex", "orthogonal-edge".
  std::string condition;
  ProjectorKey first;
  ProjectorKey second;
  double residual = 0.0;
};

struct CertificateVerdict {
  bool valid = false;
  std::vector<CertificateViolation> violations;
  /// t for quantum certificates, (1/d) sum of ranks for packings.
  double value = 0.0;
};

/// ||P^2 - P||_F.
double projector_residual(const HermitianMatrix &p);

/// Completeness (sum over vertices is I_d for every index), same-vertex
/// orthogonality and edge orthogonality across distinct indices, all in the
/// trace inner product.
CertificateVerdict verify_quantum_certificate(const Graph &g, int t, const ProjectorFamily &fam);

/// d = 1 family with P(u_i, i) = 1 for the i-th witness vertex. Throws
/// InvalidInput when the witness is not independent.
ProjectorFamily classical_certificate(const Graph &g, const IndependentSetWitness &s);

/// Per-vertex sums over indices. The graph-free certificate conditions are
/// checked; the overload taking the graph checks all of them. Throws
/// InvalidInput on an invalid certificate.
ProjectorFamily collapse_to_packing(const ProjectorFamily &fam, int t);
ProjectorFamily collapse_to_packing(const Graph &g, const ProjectorFamily &fam, int t);

/// Projector property and edge trace-orthogonality; value = sum rank / d with
/// rank = round(trace). Throws NumericalFailure when a projector's trace is
/// more than 1e-6 away from an integer.
CertificateVerdict verify_projective_packing(const Graph &g, const ProjectorFamily &fam);

/// Orthonormal eigenvectors of a projector for eigenvalue 1.
std::vector<std::vector<Complex>> spectral_resolution(const HermitianMatrix &p);

/// max |<psi_k|phi_l>| over the spectral resolutions of p and q.
double eigenvector_cross_residual(const HermitianMatrix &p, const HermitianMatrix &q);

struct IsotropyResult {
  bool isotropic = false;
  /// Number of composite vectors |u> (x) |psi(u,k)>.
  int dimension = 0;
  double gram_residual = 0.0;
  double form_residual = 0.0;
  /// Worst offending vertex pair when not isotropic.
  std::optional<std::pair<Vertex, Vertex>> worst_pair;
};

/// Builds the composite vectors of a packing and checks that they are
/// orthonormal and that the form of W (x) I_d vanishes on all pairs.
IsotropyResult isotropy_check(const HermitianMatrix &w, const ProjectorFamily &fam,
                              const Graph &g);

/// {"d": int, "entries": [{"vertex": u, "index": i?, "re": [[..]], "im": [[..]]}]}
ProjectorFamily parse_projector_family(std::string_view json_text);
std::string emit_projector_family(const ProjectorFamily &fam);

} // namespace isobound
