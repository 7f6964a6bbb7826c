// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "idpent/hilbert.hpp"

#include <random>

namespace idpent {

/// Complex Gaussian vector, normalized.
Ket random_ket(const SpacePtr& space, std::mt19937_64& rng);

/// Haar-distributed unitary (QR of a complex Gaussian matrix with phase fix).
Matrix random_unitary(int dim, std::mt19937_64& rng);

/// Random density matrix of full rank: W W† / Tr.
Matrix random_density(int dim, std::mt19937_64& rng);

}  // namespace idpent
