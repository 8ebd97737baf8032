#pragma once

#include <string>
#include <string_view>

#include <fourfa/image/raster.hpp>

namespace fourfa {

inline constexpr double default_face_threshold = 0.85;

/// 64x32 ASCII-art rendering of a face, one character per cell from the
/// dark-to-light ramp "@%#*+=-:. ".
class FaceTemplate
   {
   public:
      static constexpr std::size_t cols = 64;
      static constexpr std::size_t rows = 32;
      static constexpr std::size_t cell_count = cols * rows;
      static constexpr std::string_view ramp = "@%#*+=-:. ";

      /// All cells set to the lightest ramp character.
      FaceTemplate() : m_cells(cell_count, ramp.back()) {}

      /// Throws std::invalid_argument unless exactly 2048 ramp characters.
      static FaceTemplate from_cells(std::string cells);

      /// The 33-line block "64x32" followed by the rows, joined by '\n'.
      std::string to_text() const;
      static FaceTemplate from_text(std::string_view text);

      std::string_view cells() const { return m_cells; }
      std::string_view row(std::size_t r) const { return std::string_view(m_cells).substr(r * cols, cols); }
      char at(std::size_t col, std::size_t row) const { return m_cells[row * cols + col]; }

      static bool in_ramp(char c) { return ramp.find(c) != std::string_view::npos; }

      friend bool operator==(const FaceTemplate&, const FaceTemplate&) = default;
   private:
      explicit FaceTemplate(std::string cells) : m_cells(std::move(cells)) {}
      std::string m_cells;
   };

/// Mean color per grid cell, luma = round(0.299R + 0.587G + 0.114B), cell
/// character = ramp[min(luma / 25.6, 9)]. Alpha is ignored.
/// Throws ImageTooSmall below 64x32.
FaceTemplate face_to_template(const RasterImage& image);

/// Fraction of cells with equal characters.
double match_face(const FaceTemplate& a, const FaceTemplate& b);

}
