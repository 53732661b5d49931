#include "grcodes/ortho.hpp"

#include "grcodes/error.hpp"

namespace grcodes {

std::string to_string(OrthoKind k) {
  switch (k) {
  case OrthoKind::Euclidean:
    return "euclidean";
  case OrthoKind::Hermitian:
    return "hermitian";
  case OrthoKind::Symplectic:
    return "symplectic";
  case OrthoKind::SymplecticPair:
    return "symplectic-pair";
  }
  return "";
}

OrthoKind parse_ortho_kind(std::string_view text) {
  for (auto k : {OrthoKind::Euclidean, OrthoKind::Hermitian, OrthoKind::Symplectic,
                 OrthoKind::SymplecticPair})
    if (text == to_string(k))
      return k;
  throw ParseError("unknown construction '" + std::string(text) + "'", 0);
}

namespace {

// The group ring identity and its matrix image must agree entry for entry.
OrthoCertificate certify(OrthoKind kind, std::string identity, GroupRingElement residual,
                         Matrix matrix_residual) {
  if (sigma(residual) != matrix_residual)
    throw Error("internal: group ring and matrix residuals disagree for " + identity);
  OrthoCertificate c;
  c.kind = kind;
  c.identity = std::move(identity);
  c.holds = residual.is_zero();
  if (c.holds != matrix_residual.is_zero())
    throw Error("internal: group ring and matrix verdicts disagree for " + c.identity);
  c.residual = std::move(residual);
  c.matrix_residual = std::move(matrix_residual);
  return c;
}

} // namespace

OrthoCertificate check_euclidean(const GroupRingElement &a) {
  const Matrix m = sigma(a);
  return certify(OrthoKind::Euclidean, "a*a^T", a * transpose(a), m * m.transpose());
}

OrthoCertificate check_euclidean_corollary(const GroupRingElement &a) {
  const GroupRingElement at = transpose(a);
  const GroupRingElement sq = a * a;
  OrthoCertificate c;
  c.kind = OrthoKind::Euclidean;
  c.identity = "a = a^T and a*a = 0";
  if (at != a) {
    c.failed_clause = "a = a^T";
    c.residual = a - at;
  } else if (!sq.is_zero()) {
    c.failed_clause = "a*a = 0";
    c.residual = sq;
  } else {
    c.residual = sq;
  }
  c.matrix_residual = sigma(*c.residual);
  c.holds = c.failed_clause.empty();
  if (c.holds && !check_euclidean(a).holds)
    throw Error("internal: corollary holds but a*a^T != 0");
  return c;
}

OrthoCertificate check_hermitian(const GroupRingElement &a) {
  if (a.field()->degree() != 2)
    throw Error("Hermitian test needs a field of order p^2, got " + a.field()->spec_string());
  const Matrix m = sigma(a);
  return certify(OrthoKind::Hermitian, "a*(a^p)^T", a * transpose(frobenius_power(a)),
                 m * m.frobenius().transpose());
}

OrthoCertificate check_symplectic_matrix(const Matrix &m) {
  if (m.cols() % 2)
    throw Error("symplectic test needs an even number of columns, got " +
                std::to_string(m.cols()));
  OrthoCertificate c;
  c.kind = OrthoKind::Symplectic;
  c.identity = "M*Omega*M^T";
  c.matrix_residual = m * Matrix::omega(m.field(), m.cols() / 2) * m.transpose();
  c.holds = c.matrix_residual->is_zero();
  return c;
}

OrthoCertificate check_symplectic(const GroupRingElement &a) {
  return check_symplectic_matrix(sigma(a));
}

OrthoCertificate check_symplectic_pair(const GroupRingElement &a, const GroupRingElement &b) {
  if (!same_field(a.field(), b.field()) || !same_group(a.group(), b.group()))
    throw Error("symplectic pair needs elements of the same group ring");
  OrthoCertificate c = certify(OrthoKind::SymplecticPair, "a*b^T - b*a^T",
                               a * transpose(b) - b * transpose(a),
                               sigma(a) * sigma(b).transpose() - sigma(b) * sigma(a).transpose());
  if (check_symplectic_matrix(hconcat(sigma(a), sigma(b))).holds != c.holds)
    throw Error("internal: pair identity disagrees with (sigma(a) | sigma(b))");
  return c;
}

CodeParams code_distance(const LinearCode &c, Metric metric, const LinearCode *exclude,
                         const DistanceOptions &opts) {
  try {
    return min_weight(c, {metric, exclude, opts.budget, opts.threads});
  } catch (const BudgetExceeded &) {
    if (!opts.random_fallback)
      throw;
  }
  RandomWeightOptions r;
  r.metric = metric;
  r.exclude = exclude;
  r.seed = opts.seed;
  r.samples = opts.samples;
  r.threads = opts.threads;
  return min_weight_random(c, r);
}

QeccParams derive_qecc(const LinearCode &c, const OrthoCertificate &cert,
                       const DistanceOptions &opts) {
  if (!cert.holds)
    throw CertificateFailed(to_string(cert.kind) + " certificate does not hold (" +
                            cert.identity + " is nonzero)");
  const bool symplectic =
      cert.kind == OrthoKind::Symplectic || cert.kind == OrthoKind::SymplecticPair;
  LinearCode dual = [&] {
    switch (cert.kind) {
    case OrthoKind::Euclidean:
      return dual_euclidean(c);
    case OrthoKind::Hermitian:
      return dual_hermitian(c);
    default:
      return dual_symplectic(c);
    }
  }();
  if (!dual.contains(c))
    throw CertificateFailed("code is not " + to_string(cert.kind) + " self-orthogonal");

  QeccParams q;
  q.construction = cert.kind;
  q.classical = code_distance(c, Metric::Hamming, nullptr, opts);
  const std::size_t len = c.length(), k = c.dimension();
  q.n = symplectic ? len / 2 : len;
  q.k = symplectic ? q.n - k : len - 2 * k;
  q.base_q = cert.kind == OrthoKind::Hermitian ? c.field()->characteristic()
                                               : c.field()->order();
  const Metric metric = symplectic ? Metric::Symplectic : Metric::Hamming;
  q.degenerate_dual_gap = dual.dimension() == k;
  const CodeParams d =
      code_distance(dual, metric, q.degenerate_dual_gap ? nullptr : &c, opts);
  q.d = d.d;
  q.d_exact = d.exact;
  return q;
}

} // namespace grcodes
