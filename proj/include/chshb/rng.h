// Copyright 2026 The chshb Authors
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

#ifndef CHSHB_RNG_H
#define CHSHB_RNG_H

#include <complex>
#include <cstdint>
#include <optional>
#include <random>

namespace chshb {

/// A reproducible random stream identified by (seed, stream id).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, seeded with a SplitMix64 mix of both identifiers. Uniforms and
/// Gaussians are derived by hand (53-bit mantissa fill, Box-Muller) rather
/// than through the standard distributions, whose algorithms are
/// implementation defined.
///
/// A stream is single-owner. Concurrent samplers must use distinct stream ids.
class RngStream {
   public:
    RngStream(uint64_t seed, uint64_t stream_id);

    uint64_t seed() const noexcept {
        return seed_;
    }
    uint64_t stream_id() const noexcept {
        return stream_id_;
    }

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double gaussian();
    /// Real and imaginary parts are independent standard normals.
    std::complex<double> complex_gaussian();

   private:
    uint64_t seed_;
    uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

}  // namespace chshb

#endif
