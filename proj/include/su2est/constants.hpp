#pragma once

namespace su2est {

// Numeric tolerances shared by every module. One record so that thresholds are
// changed in a single place.
struct Tolerances {
  double identity = 1e-10;             // algebraic identities, orthogonality
  double normalization = 1e-12;        // unit axes, normalized kets
  double bloch_radius = 1e-12;         // |r| may exceed 1 by this much
  double purity = 1e-10;               // | |r| - 1 | below this counts as pure
  double singular_triple = 1e-10;      // |r.(eta1 x eta2)| below this: singular QFIM
  double degenerate_cross = 1e-12;     // |eta1 x eta2| below this: commuting encodings
  double degenerate_rotation = 1e-12;  // B below this: no rotation axis
  double singular_det = 1e-12;         // det(QFIM) below this: singular
  double series_switch = 1e-4;         // Taylor branch for eta corrections
  double support_cutoff = 1e-12;       // SLD support-space eigenvalue cutoff
  double loewner_floor = -1e-9;        // min eigenvalue accepted as PSD
};

inline constexpr Tolerances kTol{};

}  // namespace su2est
