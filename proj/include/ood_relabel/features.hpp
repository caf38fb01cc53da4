#pragma once

#include <cstddef>
#include <vector>

#include "ood_relabel/matrix.hpp"
#include "ood_relabel/wav.hpp"

namespace oodrel {

struct FeatureParams {
  std::size_t window_length = 1024;
  std::size_t hop_length = 512;
  std::size_t mel_bands = 64;
  std::size_t block_length = 128;
  double log_offset = 1e-10;

  void validate() const;
};

/// Magnitude (not power) spectrogram: periodic Hann window, frame count
/// 1 + floor((len - window) / hop) after zero-padding clips shorter than one
/// window. Output is (frames x (window_length/2 + 1)).
Matrix stft_magnitude(const AudioClip& clip, std::size_t window_length, std::size_t hop_length);

/// mel(f) = 2595 * log10(1 + f / 700).
double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Triangular filters (peak 1) with centers equally spaced on the mel scale
/// between 0 Hz and sample_rate/2, sampled at the FFT bin frequencies.
/// Output is (mel_bands x (fft_size/2 + 1)).
Matrix mel_filterbank(std::size_t mel_bands, std::size_t fft_size, std::uint32_t sample_rate);

/// log(filterbank . magnitude^T + log_offset), natural log, returned as
/// (frames x mel_bands).
Matrix log_mel(const AudioClip& clip, const FeatureParams& params);

/// Consecutive non-overlapping blocks of block_length frames; the final short
/// block is zero-padded. Always returns at least one block.
std::vector<Matrix> partition_blocks(const Matrix& features, std::size_t block_length);

}  // namespace oodrel
