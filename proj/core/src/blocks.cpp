#include "wid/blocks.hpp"

#include "wid/error.hpp"
#include "wid/util.hpp"

namespace wid {

const char* source_kind_name(SourceKind kind) {
    return kind == SourceKind::RawDocument ? "raw" : "texture";
}

void BlockSpec::validate() const {
    if (width < 32 || height < 32)
        throw Error(ErrorCode::ConfigError, "block dimensions must be at least 32x32");
    if (count < 2) throw Error(ErrorCode::ConfigError, "block count must be at least 2");
}

std::vector<Block> extract_blocks(const GrayImage& img, const BlockSpec& spec,
                                  const BlockIdentity& id) {
    spec.validate();
    int per_row = img.width / spec.width;
    int per_col = img.height / spec.height;
    long possible = long(per_row) * per_col;
    if (possible < spec.count)
        throw InsufficientTextError(int(possible),
                                    str_printf("image %dx%d yields %ld of %d blocks", img.width,
                                               img.height, possible, spec.count));

    std::vector<Block> blocks;
    blocks.reserve(size_t(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        int bx = i % per_row;
        int by = i / per_row;
        Rect r{bx * spec.width, by * spec.height, (bx + 1) * spec.width - 1,
               (by + 1) * spec.height - 1};
        blocks.push_back({id.writer_id, id.document_id, i, id.kind, crop(img, r)});
    }
    return blocks;
}

std::vector<Block> extract_raw_blocks(const GrayImage& doc, const BinaryImage& mask,
                                      const BlockSpec& spec, const BlockIdentity& id) {
    Rect bbox = ink_bounding_box(mask);
    if (bbox.empty()) throw Error(ErrorCode::BlankDocument, "no ink on page");
    return extract_blocks(crop(doc, bbox), spec, id);
}

std::string block_file_name(const Block& block) {
    return block.writer_id + "_" + block.document_id + "_" + source_kind_name(block.kind) + "_" +
           std::to_string(block.index) + ".png";
}

} // namespace wid
