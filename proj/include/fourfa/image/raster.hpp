#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fourfa {

/// 8-bit RGB or RGBA raster, row-major from the top-left, channels interleaved.
class RasterImage
   {
   public:
      /// Zero-filled image. Throws std::invalid_argument on empty dimensions or
      /// a channel count other than 3 or 4.
      RasterImage(uint32_t width, uint32_t height, uint32_t channels);
      RasterImage(uint32_t width, uint32_t height, uint32_t channels, std::vector<uint8_t> samples);

      uint32_t width() const { return m_width; }
      uint32_t height() const { return m_height; }
      uint32_t channels() const { return m_channels; }
      bool has_alpha() const { return m_channels == 4; }
      std::size_t pixel_count() const { return std::size_t(m_width) * m_height; }

      std::span<const uint8_t> samples() const { return m_samples; }
      std::span<uint8_t> samples() { return m_samples; }

      uint8_t at(uint32_t x, uint32_t y, uint32_t c) const
         {
         return m_samples[(std::size_t(y) * m_width + x) * m_channels + c];
         }

      uint8_t& at(uint32_t x, uint32_t y, uint32_t c)
         {
         return m_samples[(std::size_t(y) * m_width + x) * m_channels + c];
         }

      friend bool operator==(const RasterImage&, const RasterImage&) = default;
   private:
      uint32_t m_width;
      uint32_t m_height;
      uint32_t m_channels;
      std::vector<uint8_t> m_samples;
   };

}
