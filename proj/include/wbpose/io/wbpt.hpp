#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "wbpose/encoder.hpp"
#include "wbpose/error.hpp"
#include "wbpose/tensor.hpp"

namespace wbpose::io {

static_assert(std::endian::native == std::endian::little, "WBPT I/O assumes a little-endian host");

enum class WbptKind : std::uint8_t { Confidence = 1, Paf = 2, Mask = 3, Combined = 4 };

inline constexpr std::uint32_t kWbptVersion = 1;
inline constexpr char kWbptMagic[4] = {'W', 'B', 'P', 'T'};
inline constexpr std::size_t kWbptHeaderSize = 34;

struct WbptSection {
  WbptKind kind = WbptKind::Confidence;
  std::uint32_t channels = 0;
  friend bool operator==(const WbptSection&, const WbptSection&) = default;
};

/// A tensor file: one tensor of a single kind, or S | L | W concatenated along
/// channels with a section directory (kind Combined).
struct WbptFile {
  std::uint32_t stride = 8;
  WbptKind kind = WbptKind::Confidence;
  std::uint64_t manifest_hash = 0;
  std::vector<WbptSection> sections;  // Combined only
  Tensor data;

  friend bool operator==(const WbptFile&, const WbptFile&) = default;
};

namespace detail {

template <typename T>
void put(std::vector<std::uint8_t>& out, T v) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
  out.insert(out.end(), p, p + sizeof(T));
}

template <typename T>
T get(std::span<const std::uint8_t> in, std::size_t& pos) {
  T v;
  std::memcpy(&v, in.data() + pos, sizeof(T));
  pos += sizeof(T);
  return v;
}

inline bool valid_kind(std::uint8_t k) { return k >= 1 && k <= 4; }

inline void check_mask_values(std::span<const float> values, const std::string& what) {
  for (float v : values)
    if (v != 0.0f && v != 1.0f)
      throw Error(ErrorKind::InvalidFormat, what + ": mask values must be 0 or 1");
}

}  // namespace detail

inline std::vector<std::uint8_t> serialize_wbpt(const WbptFile& f) {
  std::vector<std::uint8_t> out;
  out.reserve(kWbptHeaderSize + 4 + 5 * f.sections.size() + f.data.size() * 4);
  out.insert(out.end(), kWbptMagic, kWbptMagic + 4);
  detail::put<std::uint32_t>(out, kWbptVersion);
  detail::put<std::uint8_t>(out, 1);
  detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(f.data.width()));
  detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(f.data.height()));
  detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(f.data.channels()));
  detail::put<std::uint32_t>(out, f.stride);
  detail::put<std::uint8_t>(out, static_cast<std::uint8_t>(f.kind));
  detail::put<std::uint64_t>(out, f.manifest_hash);
  if (f.kind == WbptKind::Combined) {
    detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(f.sections.size()));
    for (const auto& s : f.sections) {
      detail::put<std::uint8_t>(out, static_cast<std::uint8_t>(s.kind));
      detail::put<std::uint32_t>(out, s.channels);
    }
  }
  const auto* p = reinterpret_cast<const std::uint8_t*>(f.data.data().data());
  out.insert(out.end(), p, p + f.data.size() * sizeof(float));
  return out;
}

inline WbptFile parse_wbpt(std::span<const std::uint8_t> in) {
  auto need = [&](std::size_t pos, std::size_t n, const char* what) {
    if (in.size() < pos + n)
      throw Error(ErrorKind::Truncated, std::string("WBPT ") + what + ": expected " +
                                            std::to_string(pos + n) + " bytes, got " +
                                            std::to_string(in.size()));
  };
  need(0, 4, "magic");
  if (std::memcmp(in.data(), kWbptMagic, 4) != 0) throw Error(ErrorKind::BadMagic, "not a WBPT file");
  need(0, kWbptHeaderSize, "header");
  std::size_t pos = 4;
  const auto version = detail::get<std::uint32_t>(in, pos);
  if (version != kWbptVersion)
    throw Error(ErrorKind::UnsupportedVersion, "WBPT version " + std::to_string(version));
  const auto endian = detail::get<std::uint8_t>(in, pos);
  if (endian != 1) throw Error(ErrorKind::UnsupportedVersion, "WBPT file is not little-endian");
  const auto w = detail::get<std::uint32_t>(in, pos);
  const auto h = detail::get<std::uint32_t>(in, pos);
  const auto c = detail::get<std::uint32_t>(in, pos);
  WbptFile f;
  f.stride = detail::get<std::uint32_t>(in, pos);
  const auto kind = detail::get<std::uint8_t>(in, pos);
  if (!detail::valid_kind(kind))
    throw Error(ErrorKind::InvalidFormat, "unknown WBPT kind " + std::to_string(kind));
  f.kind = static_cast<WbptKind>(kind);
  f.manifest_hash = detail::get<std::uint64_t>(in, pos);
  if (f.kind == WbptKind::Combined) {
    need(pos, 4, "section count");
    const auto n = detail::get<std::uint32_t>(in, pos);
    need(pos, static_cast<std::size_t>(n) * 5, "section directory");
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      WbptSection s;
      const auto k = detail::get<std::uint8_t>(in, pos);
      if (!detail::valid_kind(k) || k == 4)
        throw Error(ErrorKind::InvalidFormat, "bad WBPT section kind " + std::to_string(k));
      s.kind = static_cast<WbptKind>(k);
      s.channels = detail::get<std::uint32_t>(in, pos);
      total += s.channels;
      f.sections.push_back(s);
    }
    if (total != c) throw Error(ErrorKind::InvalidFormat, "WBPT sections do not sum to channels");
  }
  const std::uint64_t floats = static_cast<std::uint64_t>(w) * h * c;
  const std::uint64_t expected = pos + floats * 4;
  if (in.size() < expected)
    throw Error(ErrorKind::Truncated, "WBPT payload: expected " + std::to_string(expected) +
                                          " bytes, got " + std::to_string(in.size()));
  if (in.size() > expected)
    throw Error(ErrorKind::InvalidFormat, "WBPT file has " + std::to_string(in.size() - expected) +
                                              " trailing bytes");
  f.data = Tensor(static_cast<int>(c), static_cast<int>(h), static_cast<int>(w));
  std::memcpy(f.data.data().data(), in.data() + pos, floats * 4);

  if (f.kind == WbptKind::Mask) detail::check_mask_values(f.data.data(), "WBPT");
  if (f.kind == WbptKind::Combined) {
    std::size_t offset = 0;
    const std::size_t plane = static_cast<std::size_t>(w) * h;
    for (const auto& s : f.sections) {
      if (s.kind == WbptKind::Mask)
        detail::check_mask_values(f.data.data().subspan(offset * plane, s.channels * plane), "WBPT");
      offset += s.channels;
    }
  }
  return f;
}

inline std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

inline WbptFile read_wbpt(const std::string& path) { return parse_wbpt(read_bytes(path)); }

inline void write_wbpt(const std::string& path, const WbptFile& f) {
  write_bytes(path, serialize_wbpt(f));
}

namespace detail {

inline Tensor concat_channels(std::initializer_list<const Tensor*> parts) {
  int c = 0;
  const Tensor* first = *parts.begin();
  for (const Tensor* t : parts) {
    if (t->height() != first->height() || t->width() != first->width())
      throw Error(ErrorKind::ShapeMismatch, "sections disagree on map size");
    c += t->channels();
  }
  Tensor out(c, first->height(), first->width());
  std::size_t off = 0;
  for (const Tensor* t : parts) {
    std::copy(t->data().begin(), t->data().end(), out.data().begin() + off);
    off += t->size();
  }
  return out;
}

}  // namespace detail

/// S*, L* and the mask W (S-mask channels then L-mask channels) in one file.
inline WbptFile from_targets(const TargetTensors& t, std::uint64_t manifest_hash) {
  WbptFile f;
  f.stride = static_cast<std::uint32_t>(t.grid.stride);
  f.kind = WbptKind::Combined;
  f.manifest_hash = manifest_hash;
  f.sections = {{WbptKind::Confidence, static_cast<std::uint32_t>(t.s_star.channels())},
                {WbptKind::Paf, static_cast<std::uint32_t>(t.l_star.channels())},
                {WbptKind::Mask, static_cast<std::uint32_t>(t.s_mask.channels() + t.l_mask.channels())}};
  f.data = detail::concat_channels({&t.s_star, &t.l_star, &t.s_mask, &t.l_mask});
  return f;
}

/// Channel slice [first, first + count) of a tensor.
inline Tensor channel_slice(const Tensor& t, int first, int count) {
  Tensor out(count, t.height(), t.width());
  const std::size_t plane = static_cast<std::size_t>(t.height()) * t.width();
  std::copy(t.data().begin() + first * plane, t.data().begin() + (first + count) * plane,
            out.data().begin());
  return out;
}

/// Inverse of from_targets. Needs the S | L | W layout with W sized S + L.
inline TargetTensors to_targets(const WbptFile& f) {
  if (f.kind != WbptKind::Combined || f.sections.size() != 3 ||
      f.sections[0].kind != WbptKind::Confidence || f.sections[1].kind != WbptKind::Paf ||
      f.sections[2].kind != WbptKind::Mask ||
      f.sections[2].channels != f.sections[0].channels + f.sections[1].channels)
    throw Error(ErrorKind::InvalidFormat, "WBPT file is not a combined S|L|W target file");
  TargetTensors t;
  t.grid = {f.data.width(), f.data.height(), static_cast<int>(f.stride)};
  const int cs = static_cast<int>(f.sections[0].channels);
  const int cl = static_cast<int>(f.sections[1].channels);
  t.s_star = channel_slice(f.data, 0, cs);
  t.l_star = channel_slice(f.data, cs, cl);
  t.s_mask = channel_slice(f.data, cs + cl, cs);
  t.l_mask = channel_slice(f.data, 2 * cs + cl, cl);
  return t;
}

/// Confidence and PAF tensors from any file that has them (combined or a pair).
struct Predictions {
  Tensor confidence;
  Tensor paf;
  int stride = 8;
};

inline Predictions predictions_from(const WbptFile& f) {
  if (f.kind != WbptKind::Combined)
    throw Error(ErrorKind::InvalidFormat, "expected a combined WBPT file with S and L sections");
  Predictions p;
  p.stride = static_cast<int>(f.stride);
  int off = 0;
  bool have_s = false, have_l = false;
  for (const auto& s : f.sections) {
    const int n = static_cast<int>(s.channels);
    if (s.kind == WbptKind::Confidence && !have_s) p.confidence = channel_slice(f.data, off, n), have_s = true;
    if (s.kind == WbptKind::Paf && !have_l) p.paf = channel_slice(f.data, off, n), have_l = true;
    off += n;
  }
  if (!have_s || !have_l) throw Error(ErrorKind::InvalidFormat, "WBPT file lacks S or L section");
  return p;
}

}  // namespace wbpose::io
