#pragma once

#include <png.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "sdr/error.hpp"
#include "sdr/math.hpp"

namespace sdr {

struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> rgb;  // 3 bytes per pixel, row-major

    Color3 sample_bilinear(double u, double v) const {
        u = clamp(u, 0.0, 1.0) * (width - 1);
        v = clamp(v, 0.0, 1.0) * (height - 1);
        int x0 = static_cast<int>(u), y0 = static_cast<int>(v);
        int x1 = std::min(x0 + 1, width - 1), y1 = std::min(y0 + 1, height - 1);
        double fx = u - x0, fy = v - y0;
        auto px = [&](int x, int y) {
            const uint8_t* p = &rgb[3 * (static_cast<size_t>(y) * width + x)];
            return Color3{p[0] / 255.0f, p[1] / 255.0f, p[2] / 255.0f};
        };
        Color3 top = lerp(px(x0, y0), px(x1, y0), static_cast<float>(fx));
        Color3 bot = lerp(px(x0, y1), px(x1, y1), static_cast<float>(fx));
        return lerp(top, bot, static_cast<float>(fy));
    }
};

namespace detail {

struct PngWriteCtx {
    FILE* f = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriteCtx() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (f) std::fclose(f);
    }
};

struct PngReadCtx {
    FILE* f = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReadCtx() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (f) std::fclose(f);
    }
};

inline void atomic_rename(const std::string& tmp, const std::string& path) {
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + path + ": " + ec.message());
}

template <typename RowFn>
void write_png(const std::string& path, int width, int height, int bit_depth, int color_type,
               bool swap_bytes, RowFn row) {
    const std::string tmp = path + ".tmp";
    PngWriteCtx ctx;
    ctx.f = std::fopen(tmp.c_str(), "wb");
    if (!ctx.f) throw IoError("cannot open for writing: " + tmp);
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw IoError("png_create_write_struct failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(ctx.png))) throw IoError("png write failed: " + path);

    png_init_io(ctx.png, ctx.f);
    png_set_compression_level(ctx.png, 4);
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), bit_depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    if (swap_bytes) png_set_swap(ctx.png);
    for (int y = 0; y < height; ++y)
        png_write_row(ctx.png, reinterpret_cast<png_const_bytep>(row(y)));
    png_write_end(ctx.png, nullptr);
    std::fclose(ctx.f);
    ctx.f = nullptr;
    atomic_rename(tmp, path);
}

}  // namespace detail

inline void write_png_rgb8(const std::string& path, int width, int height,
                           const uint8_t* rgb) {
    detail::write_png(path, width, height, 8, PNG_COLOR_TYPE_RGB, false, [&](int y) {
        return rgb + static_cast<size_t>(y) * width * 3;
    });
}

inline void write_png_gray16(const std::string& path, int width, int height,
                             const uint16_t* gray) {
    detail::write_png(path, width, height, 16, PNG_COLOR_TYPE_GRAY, true, [&](int y) {
        return reinterpret_cast<const uint8_t*>(gray + static_cast<size_t>(y) * width);
    });
}

/// Read any 8/16-bit gray/palette/rgb/rgba PNG as 8-bit RGB.
inline RasterImage read_png_rgb8(const std::string& path) {
    detail::PngReadCtx ctx;
    ctx.f = std::fopen(path.c_str(), "rb");
    if (!ctx.f) throw IoError("cannot open: " + path);
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw IoError("png_create_read_struct failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(ctx.png))) throw IoError("png read failed: " + path);

    png_init_io(ctx.png, ctx.f);
    png_read_info(ctx.png, ctx.info);
    png_set_expand(ctx.png);
    png_set_strip_16(ctx.png);
    png_set_strip_alpha(ctx.png);
    png_set_gray_to_rgb(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    RasterImage img;
    img.width = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    img.height = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    img.rgb.resize(static_cast<size_t>(img.width) * img.height * 3);
    for (int y = 0; y < img.height; ++y)
        png_read_row(ctx.png, img.rgb.data() + static_cast<size_t>(y) * img.width * 3, nullptr);
    return img;
}

/// Read a 16-bit grayscale PNG (depth / instance buffers) without conversion.
inline std::vector<uint16_t> read_png_gray16(const std::string& path, int& width, int& height) {
    detail::PngReadCtx ctx;
    ctx.f = std::fopen(path.c_str(), "rb");
    if (!ctx.f) throw IoError("cannot open: " + path);
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw IoError("png_create_read_struct failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(ctx.png))) throw IoError("png read failed: " + path);

    png_init_io(ctx.png, ctx.f);
    png_read_info(ctx.png, ctx.info);
    if (png_get_bit_depth(ctx.png, ctx.info) != 16 ||
        png_get_color_type(ctx.png, ctx.info) != PNG_COLOR_TYPE_GRAY)
        throw IoError("expected 16-bit grayscale: " + path);
    png_set_swap(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    width = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    height = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    std::vector<uint16_t> out(static_cast<size_t>(width) * height);
    for (int y = 0; y < height; ++y)
        png_read_row(ctx.png,
                     reinterpret_cast<png_bytep>(out.data() + static_cast<size_t>(y) * width),
                     nullptr);
    return out;
}

inline void write_ppm(const std::string& path, int width, int height, const uint8_t* rgb) {
    const std::string tmp = path + ".tmp";
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + tmp);
    f << "P6\n" << width << " " << height << "\n255\n";
    f.write(reinterpret_cast<const char*>(rgb), static_cast<std::streamsize>(width) * height * 3);
    f.close();
    detail::atomic_rename(tmp, path);
}

inline RasterImage read_ppm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    std::string magic;
    int w, h, maxv;
    f >> magic >> w >> h >> maxv;
    if (magic != "P6" || maxv != 255) throw IoError("unsupported ppm: " + path);
    f.get();
    RasterImage img;
    img.width = w;
    img.height = h;
    img.rgb.resize(static_cast<size_t>(w) * h * 3);
    f.read(reinterpret_cast<char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
    if (!f) throw IoError("truncated ppm: " + path);
    return img;
}

/// Load a background/texture image by extension (.png or .ppm).
inline RasterImage load_image(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".png" || ext == ".PNG") return read_png_rgb8(path);
    if (ext == ".ppm" || ext == ".PPM") return read_ppm(path);
    throw IoError("unsupported image format: " + path);
}

}  // namespace sdr
