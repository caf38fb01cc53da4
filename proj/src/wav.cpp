#include "ood_relabel/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace oodrel {

namespace {

std::uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace

AudioClip read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("wav: cannot open '" + path + "'");

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0)
    throw std::runtime_error("wav '" + path + "': missing RIFF header");
  read_u32(in);
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0)
    throw std::runtime_error("wav '" + path + "': not a WAVE file");

  AudioClip clip;
  bool have_fmt = false;
  std::uint16_t channels = 0, bits = 0, format = 0;
  while (in.read(tag, 4)) {
    const std::uint32_t chunk_size = read_u32(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_u16(in);
      channels = read_u16(in);
      clip.sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (chunk_size > 16) in.ignore(chunk_size - 16);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error("wav '" + path + "': data chunk before fmt chunk");
      if (format != 1) throw std::runtime_error("wav '" + path + "': only PCM (format 1) supported");
      if (channels != 1) throw std::runtime_error("wav '" + path + "': only mono supported");
      if (bits != 16) throw std::runtime_error("wav '" + path + "': only 16-bit samples supported");
      const std::size_t count = chunk_size / 2;
      clip.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint16_t raw = read_u16(in);
        clip.samples[i] = static_cast<double>(static_cast<std::int16_t>(raw)) / 32768.0;
      }
      if (!in) throw std::runtime_error("wav '" + path + "': truncated data chunk");
      return clip;
    } else {
      in.ignore(chunk_size + (chunk_size % 2));
    }
  }
  throw std::runtime_error("wav '" + path + "': no data chunk found");
}

void write_wav(const std::string& path, const AudioClip& clip) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("wav: cannot write '" + path + "'");
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(clip.samples.size() * 2);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, clip.sample_rate);
  write_u32(out, clip.sample_rate * 2);
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);
  for (double s : clip.samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    const auto value = static_cast<std::int16_t>(std::lrint(clamped * 32767.0));
    write_u16(out, static_cast<std::uint16_t>(value));
  }
}

}  // namespace oodrel
