#include <fourfa/image/png.hpp>
#include <fourfa/errors.hpp>

#include <png.h>

#include <cstring>
#include <fstream>
#include <memory>

namespace fourfa {

namespace {

constexpr uint8_t PNG_SIGNATURE[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

struct ImageGuard
   {
   png_image* img;
   ~ImageGuard() { png_image_free(img); }
   };

}

RasterImage decode_png(ByteView png)
   {
   if(png.size() < 8 || std::memcmp(png.data(), PNG_SIGNATURE, 8) != 0)
      throw ImageFormatError("not a PNG image (lossy formats are not accepted)");

   png_image img;
   std::memset(&img, 0, sizeof(img));
   img.version = PNG_IMAGE_VERSION;
   ImageGuard guard{&img};

   if(!png_image_begin_read_from_memory(&img, png.data(), png.size()))
      throw ImageFormatError(std::string("PNG decode failed: ") + img.message);

   const bool alpha = (img.format & PNG_FORMAT_FLAG_ALPHA) != 0;
   img.format = alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
   const uint32_t channels = alpha ? 4 : 3;

   std::vector<uint8_t> samples(PNG_IMAGE_SIZE(img));
   if(!png_image_finish_read(&img, nullptr, samples.data(), 0, nullptr))
      throw ImageFormatError(std::string("PNG decode failed: ") + img.message);

   return RasterImage(img.width, img.height, channels, std::move(samples));
   }

Bytes encode_png(const RasterImage& image)
   {
   png_image img;
   std::memset(&img, 0, sizeof(img));
   img.version = PNG_IMAGE_VERSION;
   img.width = image.width();
   img.height = image.height();
   img.format = image.has_alpha() ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
   ImageGuard guard{&img};

   png_alloc_size_t size = 0;
   if(!png_image_write_to_memory(&img, nullptr, &size, 0, image.samples().data(), 0, nullptr))
      throw ImageFormatError(std::string("PNG encode failed: ") + img.message);

   Bytes out(size);
   if(!png_image_write_to_memory(&img, out.data(), &size, 0, image.samples().data(), 0, nullptr))
      throw ImageFormatError(std::string("PNG encode failed: ") + img.message);
   out.resize(size);
   return out;
   }

Bytes read_file(const std::filesystem::path& path)
   {
   std::ifstream in(path, std::ios::binary);
   if(!in)
      throw Error("cannot open " + path.string());
   Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
   if(in.bad())
      throw Error("read failed: " + path.string());
   return data;
   }

void write_file(const std::filesystem::path& path, ByteView data)
   {
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   if(!out)
      throw Error("cannot create " + path.string());
   out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
   if(!out.flush())
      throw Error("write failed: " + path.string());
   }

RasterImage read_png_file(const std::filesystem::path& path)
   {
   return decode_png(read_file(path));
   }

void write_png_file(const std::filesystem::path& path, const RasterImage& image)
   {
   write_file(path, encode_png(image));
   }

}
