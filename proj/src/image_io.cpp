#include "chromasift/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

#include <jpeglib.h>
#include <png.h>

#include "chromasift/error.hpp"

namespace chromasift {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

struct FileHandle {
    FILE* f = nullptr;
    explicit FileHandle(const std::filesystem::path& path, const char* mode)
        : f(std::fopen(path.string().c_str(), mode)) {}
    ~FileHandle() {
        if (f) std::fclose(f);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
};

// ---- PNG ----

PixelGrid decode_png(const std::filesystem::path& path) {
    FileHandle file(path, "rb");
    if (!file.f) throw IoError("cannot open " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                             nullptr, nullptr);
    if (!png) throw DecodeError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("png_create_info_struct failed");
    }

    PixelGrid grid;
    std::vector<png_byte> raster;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("corrupt PNG: " + path.string());
    }

    png_init_io(png, file.f);
    png_read_info(png, info);

    // Normalize everything to 8-bit RGB.
    png_byte color_type = png_get_color_type(png, info);
    png_byte bit_depth = png_get_bit_depth(png, info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    grid.width = static_cast<int>(png_get_image_width(png, info));
    grid.height = static_cast<int>(png_get_image_height(png, info));
    if (grid.width <= 0 || grid.height <= 0) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("empty PNG: " + path.string());
    }
    grid.pixels.resize(static_cast<std::size_t>(grid.width) * grid.height);

    std::size_t rowbytes = png_get_rowbytes(png, info);
    raster.resize(rowbytes * grid.height);
    rows.resize(grid.height);
    for (int y = 0; y < grid.height; ++y) rows[y] = &raster[rowbytes * y];
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    for (int y = 0; y < grid.height; ++y) {
        const png_byte* row = &raster[rowbytes * y];
        for (int x = 0; x < grid.width; ++x)
            grid.at(x, y) = {row[3 * x], row[3 * x + 1], row[3 * x + 2]};
    }
    return grid;
}

void encode_png(const PixelGrid& grid, const std::filesystem::path& path) {
    FileHandle file(path, "wb");
    if (!file.f) throw IoError("cannot write " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                              nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }

    std::vector<png_byte> row(static_cast<std::size_t>(grid.width) * 3);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG write failed: " + path.string());
    }

    png_init_io(png, file.f);
    png_set_IHDR(png, info, grid.width, grid.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            const Rgb& p = grid.at(x, y);
            row[3 * x] = p.r;
            row[3 * x + 1] = p.g;
            row[3 * x + 2] = p.b;
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
}

// ---- JPEG ----

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

PixelGrid decode_jpeg(const std::filesystem::path& path) {
    FileHandle file(path, "rb");
    if (!file.f) throw IoError("cannot open " + path.string());

    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;

    PixelGrid grid;
    std::vector<JSAMPLE> row;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("corrupt JPEG: " + path.string());
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, file.f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB; // grayscale gets replicated by libjpeg
    jpeg_start_decompress(&cinfo);

    grid.width = static_cast<int>(cinfo.output_width);
    grid.height = static_cast<int>(cinfo.output_height);
    grid.pixels.resize(static_cast<std::size_t>(grid.width) * grid.height);
    row.resize(static_cast<std::size_t>(grid.width) * cinfo.output_components);

    while (cinfo.output_scanline < cinfo.output_height) {
        int y = static_cast<int>(cinfo.output_scanline);
        JSAMPROW rows[1] = {row.data()};
        jpeg_read_scanlines(&cinfo, rows, 1);
        for (int x = 0; x < grid.width; ++x)
            grid.at(x, y) = {row[3 * x], row[3 * x + 1], row[3 * x + 2]};
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return grid;
}

// ---- BMP ----

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

// Uncompressed 24/32-bit BMP, bottom-up or top-down.
PixelGrid decode_bmp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (data.size() < 54 || data[0] != 'B' || data[1] != 'M')
        throw DecodeError("not a BMP: " + path.string());

    std::uint32_t pixel_offset = read_u32(&data[10]);
    std::uint32_t header_size = read_u32(&data[14]);
    if (header_size < 40) throw DecodeError("unsupported BMP header: " + path.string());

    std::int32_t width = static_cast<std::int32_t>(read_u32(&data[18]));
    std::int32_t height_raw = static_cast<std::int32_t>(read_u32(&data[22]));
    std::uint16_t bpp = read_u16(&data[28]);
    std::uint32_t compression = read_u32(&data[30]);
    if (compression != 0 || (bpp != 24 && bpp != 32))
        throw DecodeError("unsupported BMP variant (need uncompressed 24/32-bit): " +
                          path.string());

    bool top_down = height_raw < 0;
    std::int32_t height = top_down ? -height_raw : height_raw;
    if (width <= 0 || height <= 0) throw DecodeError("empty BMP: " + path.string());

    std::size_t bytes_per_pixel = bpp / 8;
    std::size_t row_stride = ((static_cast<std::size_t>(width) * bytes_per_pixel + 3) / 4) * 4;
    if (data.size() < pixel_offset + row_stride * static_cast<std::size_t>(height))
        throw DecodeError("truncated BMP: " + path.string());

    PixelGrid grid;
    grid.width = width;
    grid.height = height;
    grid.pixels.resize(static_cast<std::size_t>(width) * height);
    for (std::int32_t y = 0; y < height; ++y) {
        std::int32_t src_y = top_down ? y : height - 1 - y;
        const unsigned char* row = &data[pixel_offset + row_stride * src_y];
        for (std::int32_t x = 0; x < width; ++x) {
            const unsigned char* px = row + x * bytes_per_pixel;
            grid.at(x, y) = {px[2], px[1], px[0]}; // stored BGR(A)
        }
    }
    return grid;
}

} // namespace

bool has_image_extension(const std::filesystem::path& path) {
    std::string ext = lower_extension(path);
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

PixelGrid decode_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec)
        throw IoError("no such file: " + path.string());

    std::string ext = lower_extension(path);
    if (ext == ".png") return decode_png(path);
    if (ext == ".jpg" || ext == ".jpeg") return decode_jpeg(path);
    if (ext == ".bmp") return decode_bmp(path);
    throw DecodeError("unsupported image extension: " + path.string());
}

PixelGrid resize_bilinear(const PixelGrid& src, int dst_width, int dst_height) {
    if (dst_width < 1 || dst_height < 1)
        throw Error("resize target must be at least 1x1");
    if (src.width < 1 || src.height < 1 || src.pixels.empty())
        throw Error("cannot resize an empty grid");

    PixelGrid dst;
    dst.width = dst_width;
    dst.height = dst_height;
    dst.pixels.resize(static_cast<std::size_t>(dst_width) * dst_height);

    const double x_scale = static_cast<double>(src.width) / dst_width;
    const double y_scale = static_cast<double>(src.height) / dst_height;

    for (int y = 0; y < dst_height; ++y) {
        double sy = std::clamp((y + 0.5) * y_scale - 0.5, 0.0,
                               static_cast<double>(src.height - 1));
        int y0 = static_cast<int>(sy);
        int y1 = std::min(y0 + 1, src.height - 1);
        double fy = sy - y0;
        for (int x = 0; x < dst_width; ++x) {
            double sx = std::clamp((x + 0.5) * x_scale - 0.5, 0.0,
                                   static_cast<double>(src.width - 1));
            int x0 = static_cast<int>(sx);
            int x1 = std::min(x0 + 1, src.width - 1);
            double fx = sx - x0;

            const Rgb& p00 = src.at(x0, y0);
            const Rgb& p10 = src.at(x1, y0);
            const Rgb& p01 = src.at(x0, y1);
            const Rgb& p11 = src.at(x1, y1);

            Rgb out;
            auto blend = [&](Channel c) {
                double top = (1.0 - fx) * channel_value(p00, c) +
                             fx * channel_value(p10, c);
                double bot = (1.0 - fx) * channel_value(p01, c) +
                             fx * channel_value(p11, c);
                double v = (1.0 - fy) * top + fy * bot;
                return static_cast<std::uint8_t>(
                    std::clamp<long>(std::lround(v), 0, 255));
            };
            out.r = blend(Channel::R);
            out.g = blend(Channel::G);
            out.b = blend(Channel::B);
            dst.at(x, y) = out;
        }
    }
    return dst;
}

void write_png(const PixelGrid& grid, const std::filesystem::path& path) {
    encode_png(grid, path);
}

} // namespace chromasift
