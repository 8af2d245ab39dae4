// Copyright 2026 The v2vrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef V2VREL_RANDOM_HPP
#define V2VREL_RANDOM_HPP

#include <cstdint>
#include <limits>

namespace v2vrel
{

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based random stream satisfying UniformRandomBitGenerator.
///
/// Draw k of the stream with key K is mix64(K + k * golden), so a stream is fully
/// determined by its key and any number of streams can be created without
/// coordination. Substreams for (master seed, domain, i, j) are keyed by a
/// cascaded hash, which keeps results independent of scheduling order.
class RandomStream
{
  public:
    using result_type = std::uint64_t;

    explicit constexpr RandomStream(std::uint64_t key) noexcept : key_(key) {}

    static constexpr RandomStream substream(std::uint64_t master, std::uint64_t domain, std::uint64_t i,
                                            std::uint64_t j = 0) noexcept
    {
        std::uint64_t k = mix64(master + kGolden);
        k = mix64(k ^ (domain + 0x632be59bd9b4e019ULL));
        k = mix64(k ^ (i + 0x8cb92ba72f3d8dd7ULL));
        k = mix64(k ^ (j + 0x9e6c63d0676a9a99ULL));
        return RandomStream(k);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept { return mix64(key_ + (++counter_) * kGolden); }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr std::uint64_t draws() const noexcept { return counter_; }

  private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace v2vrel

#endif
