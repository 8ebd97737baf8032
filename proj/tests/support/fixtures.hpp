// Shared builders for tests: synthetic faces, covers, enrolled users.
#pragma once

#include <fourfa/factors/face.hpp>
#include <fourfa/factors/user.hpp>
#include <fourfa/image/raster.hpp>
#include <fourfa/random.hpp>

#include <cmath>
#include <random>
#include <string>

namespace fourfa::test {

/// Gray level at the middle of ramp bin i, so face_to_template maps it back to i.
inline uint8_t ramp_gray(std::size_t i)
   {
   return static_cast<uint8_t>(std::lround(25.6 * double(i) + 12.8));
   }

/// Renders a template as a (64*scale_x) x (32*scale_y) RGB image whose
/// template is exactly `t`.
inline RasterImage render_template(const FaceTemplate& t, uint32_t scale_x = 2, uint32_t scale_y = 2, uint32_t channels = 3)
   {
   RasterImage img(FaceTemplate::cols * scale_x, FaceTemplate::rows * scale_y, channels);
   for(uint32_t y = 0; y != img.height(); ++y)
      for(uint32_t x = 0; x != img.width(); ++x)
         {
         const char c = t.at(x / scale_x, y / scale_y);
         const uint8_t g = ramp_gray(FaceTemplate::ramp.find(c));
         for(uint32_t ch = 0; ch != 3; ++ch)
            img.at(x, y, ch) = g;
         if(channels == 4)
            img.at(x, y, 3) = 255;
         }
   return img;
   }

/// Deterministic face-like image: a light oval with two dark eyes and a mouth
/// over a noisy background, parameterised by seed.
inline RasterImage synthetic_face(uint64_t seed, uint32_t width = 128, uint32_t height = 64)
   {
   std::mt19937_64 gen(seed);
   std::uniform_real_distribution<double> jitter(-0.08, 0.08);
   const double cx = 0.5 + jitter(gen), cy = 0.5 + jitter(gen);
   const double rx = 0.3 + jitter(gen), ry = 0.4 + jitter(gen);
   const double eye = 0.12 + jitter(gen) / 2;
   std::uniform_int_distribution<int> noise(0, 60);

   RasterImage img(width, height, 3);
   for(uint32_t y = 0; y != height; ++y)
      for(uint32_t x = 0; x != width; ++x)
         {
         const double u = (x + 0.5) / width, v = (y + 0.5) / height;
         double level = 30 + noise(gen);
         const double d = std::pow((u - cx) / rx, 2) + std::pow((v - cy) / ry, 2);
         if(d < 1.0)
            level = 200 - 60 * d;
         for(double ex : {cx - eye, cx + eye})
            if(std::pow((u - ex) / 0.05, 2) + std::pow((v - (cy - 0.12)) / 0.06, 2) < 1.0)
               level = 20;
         if(std::abs(u - cx) < 0.12 && std::abs(v - (cy + 0.2)) < 0.03)
            level = 60;
         img.at(x, y, 0) = static_cast<uint8_t>(std::clamp(level + 10, 0.0, 255.0));
         img.at(x, y, 1) = static_cast<uint8_t>(std::clamp(level, 0.0, 255.0));
         img.at(x, y, 2) = static_cast<uint8_t>(std::clamp(level - 10, 0.0, 255.0));
         }
   return img;
   }

/// Copy of `t` with exactly `count` cells replaced by a different ramp character.
inline FaceTemplate perturb_template(const FaceTemplate& t, std::size_t count, uint64_t seed = 7)
   {
   std::string cells(t.cells());
   std::vector<std::size_t> idx(cells.size());
   for(std::size_t i = 0; i != idx.size(); ++i)
      idx[i] = i;
   std::mt19937_64 gen(seed);
   std::shuffle(idx.begin(), idx.end(), gen);
   for(std::size_t i = 0; i != count; ++i)
      {
      const std::size_t pos = FaceTemplate::ramp.find(cells[idx[i]]);
      cells[idx[i]] = FaceTemplate::ramp[(pos + 1 + gen() % 9) % 10];
      }
   return FaceTemplate::from_cells(cells);
   }

inline RasterImage random_cover(RandomSource& rng, uint32_t w, uint32_t h, uint32_t channels = 3)
   {
   RasterImage img(w, h, channels);
   rng.fill(img.samples());
   return img;
   }

/// Latitude offset (degrees) that moves `meters` north along a meridian,
/// using the closed-form arc length pi*R/180 = 111195 m per degree.
inline double meridian_offset_deg(double meters)
   {
   return meters / 111195.0;
   }

}
