// Copyright 2026 The cvforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVFORGE_FOCK_SPECTRAL_HPP_
#define CVFORGE_FOCK_SPECTRAL_HPP_

#include <vector>

#include "fock/types.hpp"

namespace cvforge::fock {

// Eigendecomposition H = V diag(values) V^dagger of a Hermitian generator, so
// exp(-i t H) = V diag(exp(-i t values)) V^dagger for any real t.
struct Spectrum {
  RVector values;
  CMatrix vectors;

  CMatrix evolve(double t) const;
};

enum class Generator {
  position,  // Q = (a + a^dag)/sqrt(2)
  momentum,  // P = i(a^dag - a)/sqrt(2)
  squeeze,   // i(a^2 - a^dag^2)/2, so exp(-i r H) = exp[r/2 (a^2 - a^dag^2)]
};

// Memoized spectra at matrix size `size`. Returned references stay valid for
// the lifetime of the process; lookups are safe from concurrent threads.
const Spectrum &spectrum(Generator gen, int size);

// The beamsplitter generator a1^dag a2 - a1 a2^dag conserves total photon
// number N, so it is block diagonal with untruncated blocks |i, N-i>,
// i = 0..N. Each block is diagonalized in full and then cropped to the mode-0
// indices in `first_mode` (those with i < dim and N - i < dim).
struct PhotonBlock {
  int total = 0;
  std::vector<int> first_mode;
  Spectrum spec;  // of the Hermitian i * (generator block), size total + 1
};

struct BeamsplitterSpectrum {
  int dim = 0;
  std::vector<PhotonBlock> blocks;
};

const BeamsplitterSpectrum &beamsplitter_spectrum(int dim);

}  // namespace cvforge::fock

#endif  // CVFORGE_FOCK_SPECTRAL_HPP_
