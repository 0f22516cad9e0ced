#include "lowlight/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lowlight {

namespace {

void check_shape(std::size_t width, std::size_t height, std::size_t channels, std::size_t size)
{
    if (channels != 1 && channels != 3) {
        throw std::invalid_argument("image must have 1 or 3 channels, got " +
                                    std::to_string(channels));
    }
    if (width * height * channels != size) {
        throw std::invalid_argument("image data length " + std::to_string(size) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height) + "x" + std::to_string(channels));
    }
}

bool in_unit_range(double v) { return v >= 0.0 && v <= 1.0; } // false for NaN

} // namespace

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, std::size_t channels)
    : width_(width), height_(height), channels_(channels), data_(width * height * channels, 0.0)
{
    check_shape(width, height, channels, data_.size());
}

ImageBuffer ImageBuffer::from_values(std::size_t width, std::size_t height, std::size_t channels,
                                     std::vector<double> data)
{
    check_shape(width, height, channels, data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!in_unit_range(data[i])) {
            throw std::invalid_argument("sample " + std::to_string(i) + " out of [0,1]: " +
                                        std::to_string(data[i]));
        }
    }
    ImageBuffer img;
    img.width_ = width;
    img.height_ = height;
    img.channels_ = channels;
    img.data_ = std::move(data);
    return img;
}

ImageBuffer ImageBuffer::from_values(std::size_t width, std::size_t height, std::size_t channels,
                                     std::span<const float> data)
{
    return from_values(width, height, channels, std::vector<double>(data.begin(), data.end()));
}

ImageBuffer ImageBuffer::filled(std::size_t width, std::size_t height, std::size_t channels,
                                double value)
{
    return from_values(width, height, channels,
                       std::vector<double>(width * height * channels, value));
}

double ImageBuffer::at(std::size_t x, std::size_t y, std::size_t c) const
{
    if (x >= width_ || y >= height_ || c >= channels_) {
        throw std::out_of_range("pixel index out of range");
    }
    return data_[(y * width_ + x) * channels_ + c];
}

void ImageBuffer::set(std::size_t x, std::size_t y, std::size_t c, double value)
{
    if (x >= width_ || y >= height_ || c >= channels_) {
        throw std::out_of_range("pixel index out of range");
    }
    if (!in_unit_range(value)) {
        throw std::invalid_argument("sample out of [0,1]: " + std::to_string(value));
    }
    data_[(y * width_ + x) * channels_ + c] = value;
}

} // namespace lowlight
