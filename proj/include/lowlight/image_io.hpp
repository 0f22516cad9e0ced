#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "lowlight/image.hpp"

namespace lowlight {

class ImageIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes an 8-bit PNG or JPEG. Gray files load as 1 channel, color files as
/// RGB; alpha is dropped. Samples are byte / 255.
ImageBuffer load_image(const std::filesystem::path& path);

/// Writes an 8-bit PNG, quantizing with round-half-away-from-zero.
void save_png(const ImageBuffer& img, const std::filesystem::path& path);

/// In-memory codec round trip, used by the end-to-end benchmark.
std::vector<std::uint8_t> encode_png(const ImageBuffer& img);
ImageBuffer decode_image(const std::vector<std::uint8_t>& bytes);

/// Quantized samples in buffer order (RGB interleaved or gray).
std::vector<std::uint8_t> quantize(const ImageBuffer& img);

} // namespace lowlight
