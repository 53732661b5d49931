#pragma once

#include "grcodes/group_ring.hpp"
#include "grcodes/linear_code.hpp"

#include <optional>
#include <string>

namespace grcodes {

enum class OrthoKind { Euclidean, Hermitian, Symplectic, SymplecticPair };
std::string to_string(OrthoKind k);
/// Accepts euclidean, hermitian, symplectic and symplectic-pair.
OrthoKind parse_ortho_kind(std::string_view text);

/**
 * Outcome of a self-orthogonality test. `identity` names the tested
 * expression; the residual is that expression's value, at the group ring
 * level when one exists and always at the matrix level.
 */
struct OrthoCertificate {
  OrthoKind kind = OrthoKind::Euclidean;
  std::string identity;
  bool holds = false;
  std::optional<GroupRingElement> residual;
  std::optional<Matrix> matrix_residual;
  /// For the corollary test: the first clause that did not hold.
  std::string failed_clause;
};

/// aa^T = 0, cross-checked against sigma(a) sigma(a)^T = O.
OrthoCertificate check_euclidean(const GroupRingElement &a);
/// a = a^T and a^2 = 0 (sufficient for check_euclidean).
OrthoCertificate check_euclidean_corollary(const GroupRingElement &a);
/// a (a^p)^T = 0 over F_{p^2}, cross-checked against M conj(M)^T = O.
OrthoCertificate check_hermitian(const GroupRingElement &a);
/// M Omega M^T = O for a matrix with 2n columns.
OrthoCertificate check_symplectic_matrix(const Matrix &m);
/// check_symplectic_matrix(sigma(a)); the group order must be even.
OrthoCertificate check_symplectic(const GroupRingElement &a);
/// ab^T = ba^T, cross-checked against check_symplectic_matrix((sigma(a) | sigma(b))).
OrthoCertificate check_symplectic_pair(const GroupRingElement &a, const GroupRingElement &b);

struct DistanceOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned threads = 0;
  /// Fall back to information-set sampling when exact enumeration is over budget.
  bool random_fallback = false;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
};

struct QeccParams {
  std::size_t n = 0, k = 0, d = 0;
  std::uint32_t base_q = 0;
  OrthoKind construction = OrthoKind::Euclidean;
  bool d_exact = true;
  CodeParams classical;
  /// C equals its dual, so d is the minimum weight of the dual itself.
  bool degenerate_dual_gap = false;
};

/// Quantum parameters from a classical code with a holding certificate of the
/// same kind. Euclidean: [[n, n-2k, d_H]]_q; Hermitian over F_{p^2}:
/// [[n, n-2k, d_H]]_p; symplectic from length 2n: [[n, n-k, d_S]]_q. The
/// distance ranges over the dual minus C. Throws CertificateFailed if the
/// certificate is missing, of another kind, fails, or C is not contained in
/// its dual.
QeccParams derive_qecc(const LinearCode &c, const OrthoCertificate &cert,
                       const DistanceOptions &opts = {});

/// Exact minimum weight, or a sampled upper bound when allowed and the exact
/// enumeration is over budget.
CodeParams code_distance(const LinearCode &c, Metric metric, const LinearCode *exclude,
                         const DistanceOptions &opts);

} // namespace grcodes
