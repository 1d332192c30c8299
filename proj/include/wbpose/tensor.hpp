#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wbpose/error.hpp"

namespace wbpose {

/// Output map geometry. Map cell (x, y) sits at input pixel (x * stride, y * stride).
struct GridSpec {
  int map_w = 0;
  int map_h = 0;
  int stride = 8;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Map dims for an image; partial cells at the border are kept (ceil).
inline GridSpec grid_for_image(int image_w, int image_h, int stride) {
  if (stride <= 0 || image_w <= 0 || image_h <= 0)
    throw Error(ErrorKind::GridTooSmall, "image " + std::to_string(image_w) + "x" +
                                             std::to_string(image_h) + " at stride " +
                                             std::to_string(stride));
  return {(image_w + stride - 1) / stride, (image_h + stride - 1) / stride, stride};
}

/// Dense channels x height x width tensor, channel-major then row-major.
template <typename T>
class BasicTensor {
 public:
  using value_type = T;

  BasicTensor() = default;
  BasicTensor(int channels, int height, int width, T fill = T{})
      : channels_(channels), height_(height), width_(width),
        data_(static_cast<std::size_t>(channels) * height * width, fill) {
    if (channels < 0 || height < 0 || width < 0)
      throw Error(ErrorKind::ShapeMismatch, "negative tensor dimension");
  }

  int channels() const noexcept { return channels_; }
  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t plane_size() const noexcept { return static_cast<std::size_t>(height_) * width_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(int c, int y, int x) noexcept { return data_[index(c, y, x)]; }
  const T& operator()(int c, int y, int x) const noexcept { return data_[index(c, y, x)]; }

  std::span<T> plane(int c) noexcept { return {data_.data() + c * plane_size(), plane_size()}; }
  std::span<const T> plane(int c) const noexcept {
    return {data_.data() + c * plane_size(), plane_size()};
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  bool same_shape(const auto& other) const noexcept {
    return channels_ == other.channels() && height_ == other.height() && width_ == other.width();
  }

  void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

  friend bool operator==(const BasicTensor&, const BasicTensor&) = default;

 private:
  std::size_t index(int c, int y, int x) const noexcept {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int channels_ = 0;
  int height_ = 0;
  int width_ = 0;
  std::vector<T> data_;
};

using Tensor = BasicTensor<float>;

template <typename A, typename B>
void require_same_shape(const A& a, const B& b, const char* what) {
  if (!a.same_shape(b))
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + ": " + std::to_string(a.channels()) + "x" +
                    std::to_string(a.height()) + "x" + std::to_string(a.width()) + " vs " +
                    std::to_string(b.channels()) + "x" + std::to_string(b.height()) + "x" +
                    std::to_string(b.width()));
}

}  // namespace wbpose
