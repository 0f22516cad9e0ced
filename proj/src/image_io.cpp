#include "lowlight/image_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "lowlight/color.hpp"

namespace lowlight {

namespace {

ImageBuffer from_mat(const cv::Mat& mat, const std::string& what)
{
    if (mat.empty()) {
        throw ImageIoError("cannot decode image: " + what);
    }
    if (mat.depth() != CV_8U) {
        throw ImageIoError("only 8-bit images are supported: " + what);
    }
    const int src_channels = mat.channels();
    if (src_channels != 1 && src_channels != 3 && src_channels != 4) {
        throw ImageIoError("unsupported channel count " + std::to_string(src_channels) + ": " +
                           what);
    }
    const std::size_t width = static_cast<std::size_t>(mat.cols);
    const std::size_t height = static_cast<std::size_t>(mat.rows);
    const std::size_t channels = src_channels == 1 ? 1 : 3;

    std::vector<double> data(width * height * channels);
    for (std::size_t y = 0; y < height; ++y) {
        const std::uint8_t* row = mat.ptr<std::uint8_t>(static_cast<int>(y));
        for (std::size_t x = 0; x < width; ++x) {
            const std::uint8_t* px = row + x * static_cast<std::size_t>(src_channels);
            double* dst = data.data() + (y * width + x) * channels;
            if (channels == 1) {
                dst[0] = from_byte(px[0]);
            } else {
                // OpenCV stores BGR(A).
                dst[0] = from_byte(px[2]);
                dst[1] = from_byte(px[1]);
                dst[2] = from_byte(px[0]);
            }
        }
    }
    return ImageBuffer::from_values(width, height, channels, std::move(data));
}

cv::Mat to_mat(const ImageBuffer& img)
{
    const int type = img.channels() == 1 ? CV_8UC1 : CV_8UC3;
    cv::Mat mat(static_cast<int>(img.height()), static_cast<int>(img.width()), type);
    const auto bytes = quantize(img);
    const std::size_t c = img.channels();
    for (std::size_t y = 0; y < img.height(); ++y) {
        std::uint8_t* row = mat.ptr<std::uint8_t>(static_cast<int>(y));
        for (std::size_t x = 0; x < img.width(); ++x) {
            const std::uint8_t* src = bytes.data() + (y * img.width() + x) * c;
            std::uint8_t* dst = row + x * c;
            if (c == 1) {
                dst[0] = src[0];
            } else {
                dst[0] = src[2];
                dst[1] = src[1];
                dst[2] = src[0];
            }
        }
    }
    return mat;
}

} // namespace

std::vector<std::uint8_t> quantize(const ImageBuffer& img)
{
    const auto data = img.data();
    std::vector<std::uint8_t> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        out[i] = to_byte(data[i]);
    }
    return out;
}

ImageBuffer load_image(const std::filesystem::path& path)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw ImageIoError("no such file: " + path.string());
    }
    cv::Mat mat;
    try {
        mat = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    } catch (const cv::Exception& e) {
        throw ImageIoError("cannot decode image: " + path.string() + ": " + e.what());
    }
    return from_mat(mat, path.string());
}

void save_png(const ImageBuffer& img, const std::filesystem::path& path)
{
    if (img.empty()) {
        throw ImageIoError("refusing to write empty image: " + path.string());
    }
    bool ok = false;
    try {
        ok = cv::imwrite(path.string(), to_mat(img));
    } catch (const cv::Exception& e) {
        throw ImageIoError("cannot write " + path.string() + ": " + e.what());
    }
    if (!ok) {
        throw ImageIoError("cannot write " + path.string());
    }
}

std::vector<std::uint8_t> encode_png(const ImageBuffer& img)
{
    std::vector<std::uint8_t> bytes;
    if (!cv::imencode(".png", to_mat(img), bytes)) {
        throw ImageIoError("PNG encoding failed");
    }
    return bytes;
}

ImageBuffer decode_image(const std::vector<std::uint8_t>& bytes)
{
    cv::Mat mat;
    try {
        mat = cv::imdecode(bytes, cv::IMREAD_UNCHANGED);
    } catch (const cv::Exception& e) {
        throw ImageIoError(std::string("cannot decode in-memory image: ") + e.what());
    }
    return from_mat(mat, "<memory>");
}

} // namespace lowlight
