#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lowlight {

enum class ChannelOrder { Gray, Rgb };

/// Row-major, channel-interleaved image with every sample in [0,1].
/// Samples are held as double; float data is accepted at construction.
class ImageBuffer {
public:
    ImageBuffer() = default;

    /// Zero-filled image. channels must be 1 or 3.
    ImageBuffer(std::size_t width, std::size_t height, std::size_t channels);

    /// Validates shape and range; throws std::invalid_argument.
    static ImageBuffer from_values(std::size_t width, std::size_t height, std::size_t channels,
                                   std::vector<double> data);
    static ImageBuffer from_values(std::size_t width, std::size_t height, std::size_t channels,
                                   std::span<const float> data);

    /// Every sample set to value.
    static ImageBuffer filled(std::size_t width, std::size_t height, std::size_t channels,
                              double value);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t channels() const noexcept { return channels_; }
    std::size_t pixel_count() const noexcept { return width_ * height_; }
    bool empty() const noexcept { return data_.empty(); }
    ChannelOrder order() const noexcept
    {
        return channels_ == 1 ? ChannelOrder::Gray : ChannelOrder::Rgb;
    }

    std::span<const double> data() const noexcept { return data_; }

    double at(std::size_t x, std::size_t y, std::size_t c = 0) const;
    /// Throws std::invalid_argument for values outside [0,1].
    void set(std::size_t x, std::size_t y, std::size_t c, double value);

    bool same_shape(const ImageBuffer& other) const noexcept
    {
        return width_ == other.width_ && height_ == other.height_ &&
               channels_ == other.channels_;
    }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::size_t channels_ = 0;
    std::vector<double> data_;
};

} // namespace lowlight
