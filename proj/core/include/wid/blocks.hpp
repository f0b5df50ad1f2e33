#pragma once

#include <string>
#include <vector>

#include "wid/image.hpp"

namespace wid {

enum class SourceKind { RawDocument, Texture };

const char* source_kind_name(SourceKind kind);

struct BlockSpec {
    int width = 256;
    int height = 256;
    int count = 9;

    void validate() const; // width/height >= 32, count >= 2
};

struct BlockIdentity {
    std::string writer_id;
    std::string document_id;
    SourceKind kind = SourceKind::Texture;
};

struct Block {
    std::string writer_id;
    std::string document_id;
    int index = 0;
    SourceKind kind = SourceKind::Texture;
    GrayImage pixels;
};

// Cuts spec.count non-overlapping width x height blocks row-major from the
// top-left of the image. Throws InsufficientTextError (with the achievable
// count) when the image cannot yield spec.count blocks.
std::vector<Block> extract_blocks(const GrayImage& img, const BlockSpec& spec,
                                  const BlockIdentity& id);

// Raw-document blocks are cut from the ink bounding box so page margins do
// not produce blank blocks.
std::vector<Block> extract_raw_blocks(const GrayImage& doc, const BinaryImage& mask,
                                      const BlockSpec& spec, const BlockIdentity& id);

// Cache file name for a persisted block: <writer>_<doc>_<kind>_<index>.png
std::string block_file_name(const Block& block);

} // namespace wid
