#pragma once

#include <cstdint>
#include <random>

#include "hrlab/form.hpp"
#include "hrlab/pairings.hpp"
#include "hrlab/positivity.hpp"

namespace hrlab {

using Rng = std::mt19937_64;

Complex random_complex(Rng& rng);

// Random positive (1,1)-form from the G G^dagger + eps I generator.
Form random_positive_form(int n, std::uint64_t seed);
Form random_positive_form(int n, Rng& rng);

// Dense (p,q)-form with standard gaussian complex coefficients.
Form random_form(int n, int p, int q, Rng& rng);

// Random real (p,q)-form, built as g + conj(g).
Form random_real_form(int n, int p, int q, Rng& rng);

Eigen::VectorXcd random_covector(int n, Rng& rng);

// End-valued (1,0)-form theta = sum_a N_a dz^a with gaussian matrices N_a.
EndValuedForm random_theta(int r, int n, Rng& rng);

// Random i-hermitian (1,1) End-valued form (i.e. i F has hermitian structure).
EndValuedForm random_ihermitian(int r, const Form& omega0, Rng& rng);

// Traceless, entrywise primitive, i-hermitian curvature-like input for the
// BMY density, normalized to unit sup-norm.
EndValuedForm random_primitive_traceless_ihermitian(int r, const Form& omega0,
                                                    const Form& bigOmega0, Rng& rng);

// Random strongly positive decomposition with `terms` simple terms.
StrongPositivityDecomposition random_decomposition(int n, int terms, Rng& rng);

}  // namespace hrlab
