#include "tcent/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace tcent {

namespace {

uint32_t word0(std::span<const uint64_t> words) {
  return words.empty() ? 0u : static_cast<uint32_t>(words[0]);
}

}  // namespace

Eigen::VectorXcd apply_pauli(const PauliWord& p, const Eigen::VectorXcd& in) {
  const std::size_t dim = static_cast<std::size_t>(in.size());
  uint32_t xm = word0(p.x_words());
  uint32_t zm = word0(p.z_words());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
  for (std::size_t i = 0; i < dim; ++i) {
    double sgn = p.sign();
    if (__builtin_popcount(static_cast<uint32_t>(i) & zm) & 1) sgn = -sgn;
    out[static_cast<Eigen::Index>(i ^ xm)] += sgn * in[static_cast<Eigen::Index>(i)];
  }
  return out;
}

DenseState dense_from_generators(std::size_t n_qubits,
                                 std::span<const PauliWord> generators) {
  if (n_qubits > kDenseMaxQubits) {
    throw std::invalid_argument("dense oracle capped at 14 qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  for (std::size_t ref = 0; ref < dim; ++ref) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(ref)] = 1.0;
    bool dead = false;
    for (const auto& g : generators) {
      v = 0.5 * (v + apply_pauli(g, v));
      if (v.norm() < 1e-12) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    v.normalize();
    for (const auto& g : generators) {
      if ((apply_pauli(g, v) - v).norm() > 1e-9) {
        throw std::runtime_error("dense projection produced a non-stabilized vector");
      }
    }
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v[i]) > 1e-9) {
        v *= std::conj(v[i]) / std::abs(v[i]);
        break;
      }
    }
    return DenseState{static_cast<int>(n_qubits), std::move(v)};
  }
  throw std::runtime_error("generator set is inconsistent (no stabilized vector)");
}

DenseState dense_from_stabilizers(const StabilizerState& state) {
  return dense_from_generators(state.n_qubits(), state.generators);
}

Eigen::MatrixXcd density_matrix(const DenseState& s, const Region& region) {
  if (region.n_qubits() != static_cast<std::size_t>(s.n_qubits)) {
    throw std::invalid_argument("region does not match the dense state");
  }
  auto keep = region.qubits();
  const int m = static_cast<int>(keep.size());
  const int n = s.n_qubits;
  if (m > 12) {
    throw std::invalid_argument("density matrix capped at 12 qubits");
  }
  std::vector<int> env;
  for (int q = 0; q < n; ++q) {
    if (!region.contains(static_cast<uint32_t>(q))) env.push_back(q);
  }
  const std::size_t md = std::size_t{1} << m;
  const std::size_t ed = std::size_t{1} << env.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(md),
                                                static_cast<Eigen::Index>(md));
  Eigen::VectorXcd slice(static_cast<Eigen::Index>(md));
  for (std::size_t e = 0; e < ed; ++e) {
    std::size_t base = 0;
    for (std::size_t k = 0; k < env.size(); ++k) {
      if ((e >> k) & 1) base |= std::size_t{1} << env[k];
    }
    for (std::size_t a = 0; a < md; ++a) {
      std::size_t idx = base;
      for (int k = 0; k < m; ++k) {
        if ((a >> k) & 1) idx |= std::size_t{1} << keep[static_cast<std::size_t>(k)];
      }
      slice[static_cast<Eigen::Index>(a)] = s.amplitudes[static_cast<Eigen::Index>(idx)];
    }
    rho.noalias() += slice * slice.adjoint();
  }
  return rho;
}

double dense_entropy(const DenseState& s, const Region& region) {
  if (region.size() == 0) return 0.0;
  Eigen::MatrixXcd rho = density_matrix(s, region);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double bits = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double lam = es.eigenvalues()[i];
    if (lam > 1e-14) bits -= lam * std::log2(lam);
  }
  return bits;
}

double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("fidelity: input is not positive semidefinite");
  }
  Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd sqrt_rho =
      es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::MatrixXcd m = sqrt_rho * sigma * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(m, Eigen::EigenvaluesOnly);
  double f = 0.0;
  for (Eigen::Index i = 0; i < es2.eigenvalues().size(); ++i) {
    double lam = es2.eigenvalues()[i];
    if (lam > 0) f += std::sqrt(lam);
  }
  return f;
}

LeGeReport verify_le_ge(const StabilizerState& state, const PauliWord& u,
                        const Region& a, const Region& b, const Region& c, double tol) {
  if (!a.disjoint_with(b) || !b.disjoint_with(c) || !a.disjoint_with(c)) {
    throw std::invalid_argument("verify_le_ge: regions must be disjoint");
  }
  DenseState rho = dense_from_stabilizers(state);
  DenseState sigma{rho.n_qubits, apply_pauli(u, rho.amplitudes)};

  Region ab = a | b;
  Region bc = b | c;
  Region abc = ab | c;

  LeGeReport rep;
  double dev_ab = trace_distance(density_matrix(rho, ab), density_matrix(sigma, ab));
  double dev_bc = trace_distance(density_matrix(rho, bc), density_matrix(sigma, bc));
  rep.marginal_deviation = std::max(dev_ab, dev_bc);
  rep.premise_met = rep.marginal_deviation <= tol;
  if (!rep.premise_met) return rep;

  double d = trace_distance(density_matrix(rho, abc), density_matrix(sigma, abc));
  rep.lhs = d * d;
  auto cmi = [&](const DenseState& st) {
    return dense_entropy(st, ab) + dense_entropy(st, bc) - dense_entropy(st, b) -
           dense_entropy(st, abc);
  };
  rep.rhs = cmi(rho) + cmi(sigma);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.lhs <= rep.rhs + tol;
  return rep;
}

}  // namespace tcent
