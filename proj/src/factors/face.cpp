#include <fourfa/factors/face.hpp>
#include <fourfa/errors.hpp>

#include <cmath>
#include <stdexcept>

namespace fourfa {

FaceTemplate FaceTemplate::from_cells(std::string cells)
   {
   if(cells.size() != cell_count)
      throw std::invalid_argument("face template must have 2048 cells");
   for(char c : cells)
      {
      if(!in_ramp(c))
         throw std::invalid_argument("face template cell outside the ramp alphabet");
      }
   return FaceTemplate(std::move(cells));
   }

std::string FaceTemplate::to_text() const
   {
   std::string out = "64x32";
   for(std::size_t r = 0; r != rows; ++r)
      {
      out += '\n';
      out += row(r);
      }
   return out;
   }

FaceTemplate FaceTemplate::from_text(std::string_view text)
   {
   constexpr std::string_view head = "64x32\n";
   if(text.size() != head.size() + rows * (cols + 1) - 1 || text.substr(0, head.size()) != head)
      throw std::invalid_argument("malformed face template block");
   std::string cells;
   cells.reserve(cell_count);
   for(std::size_t r = 0; r != rows; ++r)
      {
      const std::size_t off = head.size() + r * (cols + 1);
      if(r + 1 != rows && text[off + cols] != '\n')
         throw std::invalid_argument("malformed face template block");
      cells.append(text.substr(off, cols));
      }
   return from_cells(std::move(cells));
   }

FaceTemplate face_to_template(const RasterImage& image)
   {
   if(image.width() < FaceTemplate::cols || image.height() < FaceTemplate::rows)
      throw ImageTooSmall("face image must be at least 64x32");

   const uint32_t cw = image.width() / FaceTemplate::cols;
   const uint32_t ch = image.height() / FaceTemplate::rows;
   const double n = double(cw) * ch;

   std::string cells;
   cells.reserve(FaceTemplate::cell_count);
   for(uint32_t cy = 0; cy != FaceTemplate::rows; ++cy)
      {
      for(uint32_t cx = 0; cx != FaceTemplate::cols; ++cx)
         {
         uint64_t sum[3] = {0, 0, 0};
         for(uint32_t y = cy * ch; y != (cy + 1) * ch; ++y)
            for(uint32_t x = cx * cw; x != (cx + 1) * cw; ++x)
               for(uint32_t c = 0; c != 3; ++c)
                  sum[c] += image.at(x, y, c);

         const double luma = 0.299 * (sum[0] / n) + 0.587 * (sum[1] / n) + 0.114 * (sum[2] / n);
         const long level = std::lround(luma);
         // floor(level / 25.6) == floor(level * 10 / 256) for integer level
         const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(level) * 10 / 256, 9);
         cells.push_back(FaceTemplate::ramp[idx]);
         }
      }
   return FaceTemplate::from_cells(std::move(cells));
   }

double match_face(const FaceTemplate& a, const FaceTemplate& b)
   {
   std::size_t equal = 0;
   for(std::size_t i = 0; i != FaceTemplate::cell_count; ++i)
      equal += a.cells()[i] == b.cells()[i];
   return double(equal) / double(FaceTemplate::cell_count);
   }

}
