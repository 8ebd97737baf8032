#pragma once

#include <filesystem>

#include <fourfa/bytes.hpp>
#include <fourfa/image/raster.hpp>

namespace fourfa {

/// Decodes a PNG into 8-bit RGB, or RGBA when the file carries alpha.
/// Anything that is not a PNG (JPEG in particular) raises ImageFormatError:
/// lossy formats cannot carry LSB data.
RasterImage decode_png(ByteView png);

/// Encodes losslessly as 8-bit RGB/RGBA, non-interlaced.
Bytes encode_png(const RasterImage& image);

RasterImage read_png_file(const std::filesystem::path& path);
void write_png_file(const std::filesystem::path& path, const RasterImage& image);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView data);

}
