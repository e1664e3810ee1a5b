#pragma once

#include <vector>

#include <Eigen/Dense>

#include "endfire/layout.hpp"

namespace endfire {

// Convention for the coupling-matrix diagonal.
//  - resonant: each element is tuned to resonance, so the diagonal carries the
//    radiation self-resistance only (Re of the self-impedance, zero reactance).
//    This is the convention the bundled reference designs were produced under
//    and the default everywhere.
//  - full_emf: the diagonal keeps the complete self-impedance, including the
//    radius-dependent self-reactance.
enum class SelfTerm { resonant, full_emf };

struct CouplingOptions {
  SelfTerm self_term = SelfTerm::resonant;
};

// Port-domain description of the coupled array.
//  - z_radiation: mutual-coupling impedance matrix of the lossless radiating
//    structure (no ohmic loss, no loads). Symmetric, equal diagonal.
//  - z_total: z_radiation plus the per-element loss resistance on the
//    diagonal, plus the reactive loads for a single-feed array.
struct CouplingMatrices {
  Eigen::MatrixXcd z_radiation;
  Eigen::MatrixXcd z_total;
};

CouplingMatrices assemble_active(const ArrayLayout& layout, const ModelParams& p,
                                 CouplingOptions options = {});

// Single-feed array: adds +j*loads_ohm[n] to diagonal entry n for every port
// except `feed`. `loads_ohm` must have one entry per element (the feed entry
// is ignored); `feed` is a 0-based port index.
CouplingMatrices assemble_parasitic(const ArrayLayout& layout, std::size_t feed,
                                    const std::vector<double>& loads_ohm,
                                    const ModelParams& p, CouplingOptions options = {});

// Impedance-to-scattering conversion at a real reference impedance:
//   S = (Z - z0 I) (Z + z0 I)^{-1}.
Eigen::MatrixXcd z_to_s(const Eigen::MatrixXcd& z, double z0_ohm);

}  // namespace endfire
