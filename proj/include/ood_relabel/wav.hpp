#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oodrel {

/// A mono audio clip with samples normalized to [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  std::uint32_t sample_rate = 0;
};

/// Reads a RIFF/WAVE file. PCM 16-bit little-endian mono only; samples are
/// normalized by 1/32768. Unknown chunks are skipped.
AudioClip read_wav(const std::string& path);

/// Writes samples as PCM 16-bit mono (values clipped to [-1, 1]).
void write_wav(const std::string& path, const AudioClip& clip);

}  // namespace oodrel
