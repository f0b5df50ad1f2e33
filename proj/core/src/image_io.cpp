#include "wid/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <memory>
#include <vector>

#include "wid/error.hpp"
#include "wid/util.hpp"

namespace wid {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

GrayImage load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw Error(ErrorCode::IoError, "cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error(ErrorCode::IoError, "libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error(ErrorCode::IoError, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::InvalidImage, "malformed PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    int color = png_get_color_type(png, info);
    int depth = png_get_bit_depth(png, info);

    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    color = png_get_color_type(png, info);
    int channels = png_get_channels(png, info);
    size_t rowbytes = png_get_rowbytes(png, info);
    std::vector<uint8_t> raster(rowbytes * h);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = raster.data() + size_t(y) * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (channels == 1) {
        GrayImage out(int(w), int(h));
        for (png_uint_32 y = 0; y < h; ++y)
            std::memcpy(&out.data[size_t(y) * w], raster.data() + size_t(y) * rowbytes, w);
        return out;
    }
    if (channels == 3) {
        RgbImage rgb(int(w), int(h));
        for (png_uint_32 y = 0; y < h; ++y)
            std::memcpy(&rgb.data[size_t(y) * w * 3], raster.data() + size_t(y) * rowbytes,
                        size_t(w) * 3);
        return to_grayscale(rgb);
    }
    throw Error(ErrorCode::InvalidImage, "unsupported PNG layout: " + path);
}

int pgm_next_token(std::istream& in) {
    // Skips whitespace and '#' comments, returns the next integer.
    while (in) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int v = -1;
    in >> v;
    return v;
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    char m0 = 0, m1 = 0;
    in.get(m0).get(m1);
    bool binary = (m0 == 'P' && m1 == '5');
    bool ascii = (m0 == 'P' && m1 == '2');
    if (!binary && !ascii) throw Error(ErrorCode::InvalidImage, "not a PGM file: " + path);

    int w = pgm_next_token(in);
    int h = pgm_next_token(in);
    int maxval = pgm_next_token(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
        throw Error(ErrorCode::InvalidImage, "unsupported PGM header: " + path);

    GrayImage out(w, h);
    if (binary) {
        in.get(); // single whitespace after maxval
        in.read(reinterpret_cast<char*>(out.data.data()), std::streamsize(out.data.size()));
        if (size_t(in.gcount()) != out.data.size())
            throw Error(ErrorCode::InvalidImage, "truncated PGM: " + path);
    } else {
        for (auto& px : out.data) {
            int v = pgm_next_token(in);
            if (v < 0 || v > maxval) throw Error(ErrorCode::InvalidImage, "bad PGM sample: " + path);
            px = uint8_t(v);
        }
    }
    return out;
}

} // namespace

GrayImage load_gray_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw Error(ErrorCode::IoError, "cannot open " + path);
    unsigned char magic[2] = {0, 0};
    probe.read(reinterpret_cast<char*>(magic), 2);
    probe.close();
    if (magic[0] == 0x89 && magic[1] == 'P') return load_png(path);
    if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '2')) return load_pgm(path);
    throw Error(ErrorCode::InvalidImage, "unrecognized image format: " + path);
}

void save_png(const GrayImage& img, const std::string& path) {
    if (img.empty()) throw Error(ErrorCode::InvalidImage, "refusing to write empty image");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw Error(ErrorCode::IoError, "cannot write " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error(ErrorCode::IoError, "libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorCode::IoError, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::IoError, "PNG write failed: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y)
        png_write_row(png, const_cast<png_bytep>(&img.data[size_t(y) * img.width]));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void save_pgm(const GrayImage& img, const std::string& path) {
    if (img.empty()) throw Error(ErrorCode::InvalidImage, "refusing to write empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()), std::streamsize(img.data.size()));
}

} // namespace wid
