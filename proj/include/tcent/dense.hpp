#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "tcent/lattice.hpp"
#include "tcent/region.hpp"

namespace tcent {

/// Brute-force state vector on up to 14 qubits; the certification oracle for
/// the stabilizer engines.
struct DenseState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

constexpr int kDenseMaxQubits = 14;

/// The unique unit vector stabilized by every generator, with the global
/// phase fixed so the first nonzero amplitude is positive real. Works for
/// over-complete commuting generator lists too. Throws for n > 14 or an
/// inconsistent set.
DenseState dense_from_generators(std::size_t n_qubits,
                                 std::span<const PauliWord> generators);
DenseState dense_from_stabilizers(const StabilizerState& state);

/// out = p |in>.
Eigen::VectorXcd apply_pauli(const PauliWord& p, const Eigen::VectorXcd& in);

/// Reduced density matrix on the region's qubits (ascending order).
Eigen::MatrixXcd density_matrix(const DenseState& s, const Region& region);

/// Von Neumann entropy of the region's marginal, in bits.
double dense_entropy(const DenseState& s, const Region& region);

/// D(rho, sigma) = 0.5 ||rho - sigma||_1.
double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

/// F(rho, sigma) = || sqrt(rho) sqrt(sigma) ||_1.
double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

/// Local-to-global equivalence check for sigma = u rho u^dagger: verifies the
/// marginal premise on AB and BC, then compares D(rho_ABC, sigma_ABC)^2
/// against I(A:C|B)_rho + I(A:C|B)_sigma.
struct LeGeReport {
  bool premise_met = false;
  double marginal_deviation = 0.0;  // max of the two marginal trace distances
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;  // rhs - lhs
};

LeGeReport verify_le_ge(const StabilizerState& state, const PauliWord& u,
                        const Region& a, const Region& b, const Region& c,
                        double tol = 1e-9);

}  // namespace tcent
