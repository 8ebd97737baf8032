#include <fourfa/image/raster.hpp>

#include <stdexcept>

namespace fourfa {

namespace {

void check_shape(uint32_t width, uint32_t height, uint32_t channels)
   {
   if(width == 0 || height == 0)
      throw std::invalid_argument("raster dimensions must be at least 1x1");
   if(channels != 3 && channels != 4)
      throw std::invalid_argument("raster must have 3 or 4 channels");
   }

}

RasterImage::RasterImage(uint32_t width, uint32_t height, uint32_t channels) :
   m_width(width), m_height(height), m_channels(channels)
   {
   check_shape(width, height, channels);
   m_samples.assign(std::size_t(width) * height * channels, 0);
   }

RasterImage::RasterImage(uint32_t width, uint32_t height, uint32_t channels, std::vector<uint8_t> samples) :
   m_width(width), m_height(height), m_channels(channels), m_samples(std::move(samples))
   {
   check_shape(width, height, channels);
   if(m_samples.size() != std::size_t(width) * height * channels)
      throw std::invalid_argument("sample count does not match raster dimensions");
   }

}
